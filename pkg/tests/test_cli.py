import pytest

from minhamming import datastore
from minhamming.cli import run
from minhamming.stats import read_cav_csv, read_prime_csv


@pytest.fixture(scope="module")
def cache_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "m.txt"
    assert run(["sweep", "--max", "4096", "--out", str(path)]) == 0
    return path


def test_compute(capsys):
    assert run(["compute", "2023"]) == 0
    assert capsys.readouterr().out == "M(2023) = 3\n"


def test_compute_explain(capsys):
    assert run(["compute", "2023", "--explain"]) == 0
    out = capsys.readouterr().out
    assert "max(M(7), M(289))" in out
    assert run(["compute", "42", "--explain", "lines"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[1] == "EvenStrip n=42 odd=21 shift=1"
    assert lines[-1] == "Result n=42 m=3"


def test_witness(capsys):
    assert run(["witness", "1"]) == 0
    out = capsys.readouterr().out
    assert "exponents: 0\n" in out and "k = 1\n" in out and "[ok]" in out
    assert run(["witness", "2023"]) == 0
    out = capsys.readouterr().out
    assert "M(n) = 3" in out
    k = int(next(l for l in out.splitlines() if l.startswith("k = "))[4:])
    exps = [int(x) for x in next(l for l in out.splitlines() if l.startswith("exponents"))[11:].split()]
    assert sum(2**a for a in exps) == k * 2023


def test_sweep_resume(tmp_path, cache_file):
    out = tmp_path / "more.txt"
    assert run(["sweep", "--max", "5000", "--resume", str(cache_file), "--out", str(out), "--threads", "2"]) == 0
    assert datastore.load(out) == datastore.sweep(1, 5000)


def test_stats_cav(capsys, tmp_path, cache_file):
    csv_path = tmp_path / "cav.csv"
    assert run(["stats", "cav", "--max-exp", "12", "--cache", str(cache_file), "--csv", str(csv_path)]) == 0
    out = capsys.readouterr().out
    assert "3079/1024" in out and "identities hold" in out
    rows = read_cav_csv(csv_path)
    assert len(rows) == 12 and str(rows[3][1]) == "9/4"


def test_stats_mav(capsys, cache_file):
    assert run(["stats", "mav", "--at", "32", "--cache", str(cache_file)]) == 0
    assert capsys.readouterr().out == "M_av(32) = 35/16 = 2.1875\n"


def test_primes_classify(capsys, tmp_path):
    csv_path = tmp_path / "p.csv"
    assert run(["primes", "classify", "--limit", "200", "--csv", str(csv_path)]) == 0
    out = capsys.readouterr().out
    assert "P_1: 1 primes  {2}" in out
    assert "P_3:" in out and "{7, 23, 47, 71," in out
    assert "17/24" in out
    assert read_prime_csv(csv_path)[2].p == 5


def test_sturdy(capsys, cache_file):
    assert run(["sturdy", "--limit", "10", "--cache", str(cache_file)]) == 0
    assert capsys.readouterr().out.splitlines()[1] == "1 2 3 4 5 6 7 8 9 10"


def test_verify(capsys, cache_file):
    assert run(["verify", "--suite", "table1"]) == 0
    assert run(["verify", "--suite", "matrix1000", "--cache", str(cache_file)]) == 0
    assert "PASS matrix1000" in capsys.readouterr().out


def test_verify_detects_corrupt_cache(tmp_path, cache_file):
    c = datastore.load(cache_file)
    c.values[21] = 4
    bad = tmp_path / "bad.txt"
    datastore.save(c, bad)
    assert run(["verify", "--suite", "table1", "--cache", str(bad)]) == 1


def test_export_bfile(tmp_path, cache_file):
    out = tmp_path / "b.txt"
    assert run(["export", "bfile", "--cache", str(cache_file), "--out", str(out)]) == 0
    assert out.read_text().splitlines()[20] == "21 3"


@pytest.mark.parametrize(
    "argv",
    [
        ["stats", "mav", "--at", "5", "--cache", "/nonexistent"],
        ["stats", "cav", "--max-exp", "3"],
        ["compute", "0"],
        ["compute", "--bogus", "3"],
        ["verify", "--suite", "nope"],
        ["frobnicate"],
        ["stats", "cav", "--max-exp", "20", "--cache", "__CACHE__"],
    ],
)
def test_usage_errors_exit_2(argv, cache_file, capsys):
    argv = [str(cache_file) if a == "__CACHE__" else a for a in argv]
    assert run(argv) == 2
    assert "usage" in capsys.readouterr().err
