import numpy as np
import pytest

from minhamming import datastore
from minhamming.datastore import CacheError, CacheFormatError, ValueCache
from minhamming.reference import MATRIX_1000, TABLE1


def test_sweep_reproduces_references():
    c = datastore.sweep(1, 32)
    assert [c[n] for n in range(1, 33)] == list(TABLE1)
    c = datastore.sweep(1, 1000)
    assert tuple(c.values[1:].tolist()) == MATRIX_1000
    assert [c[n] for n in (126, 127, 128, 508, 510, 511, 512)] == [6, 7, 1, 7, 8, 9, 1]


def test_sweep_is_idempotent_and_extends():
    c = datastore.sweep(1, 500)
    assert datastore.sweep(1, 300, cache=c) is c
    assert datastore.sweep(200, 500, cache=c) == c
    longer = datastore.sweep(501, 900, cache=c)
    assert longer == datastore.sweep(1, 900)


def test_sweep_rejects_gap():
    c = datastore.sweep(1, 100)
    with pytest.raises(CacheError, match="gap"):
        datastore.sweep(150, 200, cache=c)


def test_thread_count_does_not_change_output(tmp_path):
    one = datastore.sweep(1, 5000, threads=1, chunk_size=512)
    two = datastore.sweep(1, 5000, threads=2, chunk_size=512)
    assert one == two
    datastore.save(one, tmp_path / "a.txt")
    datastore.save(two, tmp_path / "b.txt")
    assert (tmp_path / "a.txt").read_bytes() == (tmp_path / "b.txt").read_bytes()


def test_checkpoint_callback_sees_prefixes():
    seen = []
    datastore.sweep(1, 1000, chunk_size=300, on_chunk=lambda c: seen.append(c.max_n))
    assert seen == [300, 600, 900, 1000]


def test_even_values_follow_odd_parts():
    c = datastore.sweep(1, 4096)
    for m in range(1, 2049):
        assert c[2 * m] == c[m]


def test_format_and_round_trip(tmp_path):
    c = datastore.sweep(1, 5)
    text = datastore.dumps(c)
    assert text == "#mhw v1 max=5\n1,1\n2,1\n3,2\n4,1\n5,2\n"
    path = tmp_path / "c.txt"
    datastore.save(c, path)
    assert datastore.load(path) == c
    datastore.save(datastore.load(path), tmp_path / "d.txt")
    assert path.read_bytes() == (tmp_path / "d.txt").read_bytes()


def test_load_errors():
    with pytest.raises(CacheFormatError, match="version"):
        datastore.loads("#mhw v2 max=1\n1,1\n")
    with pytest.raises(CacheFormatError, match="line 3"):
        datastore.loads("#mhw v1 max=3\n1,1\n2;1\n3,2\n")
    with pytest.raises(CacheFormatError, match="line 3: expected n=2"):
        datastore.loads("#mhw v1 max=2\n1,1\n3,2\n")
    with pytest.raises(CacheFormatError, match="entries"):
        datastore.loads("#mhw v1 max=4\n1,1\n")
    with pytest.raises(CacheFormatError, match="header"):
        datastore.loads("n,m\n1,1\n")
    with pytest.raises(CacheFormatError, match="newline"):
        datastore.loads("#mhw v1 max=1\n1,1")


def test_merge():
    a, b = datastore.sweep(1, 100), datastore.sweep(1, 200)
    assert datastore.merge(a, b) == b
    assert datastore.merge(b, a) == b
    bad = ValueCache(a.values.copy())
    bad.values[50] += 1
    with pytest.raises(CacheError, match="n=50"):
        datastore.merge(bad, b)


def test_export_bfile(tmp_path):
    c = datastore.sweep(1, 10)
    path = tmp_path / "b086342.txt"
    datastore.export_bfile(c, path)
    lines = path.read_text().splitlines()
    assert lines[0] == "1 1" and lines[2] == "3 2" and len(lines) == 10


def test_cache_access():
    c = ValueCache(np.array([0, 1, 1, 2], np.uint8))
    assert c[3] == 2 and c.max_n == 3
    with pytest.raises(datastore.IncompleteCacheError):
        c[4]
    assert list(c.items()) == [(1, 1), (2, 1), (3, 2)]
