"""Persistent cache of M(1..N) and the sweep that fills it.

File format (text, newline terminated)::

    #mhw v1 max=N
    1,1
    2,1
    ...
    N,M(N)
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterator

import numpy as np

from .composition import fast_min_weight
from .solver import DEFAULT_MAX_RESIDUES

FORMAT_VERSION = "v1"
DEFAULT_CHUNK = 4096


class CacheError(ValueError):
    pass


class CacheFormatError(CacheError):
    pass


class IncompleteCacheError(CacheError):
    pass


@dataclass
class ValueCache:
    """Dense prefix of values: ``values[n] == M(n)`` for 1 <= n <= max_n."""

    values: np.ndarray = field(default_factory=lambda: np.zeros(1, np.uint8))
    version: str = FORMAT_VERSION

    @property
    def max_n(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.max_n:
            raise IncompleteCacheError(f"n={n} outside cached range [1, {self.max_n}]")
        return int(self.values[n])

    def __eq__(self, other):
        if not isinstance(other, ValueCache):
            return NotImplemented
        return self.version == other.version and np.array_equal(self.values, other.values)

    def require(self, hi: int) -> None:
        if hi > self.max_n:
            raise IncompleteCacheError(
                f"cache covers [1, {self.max_n}]; missing [{self.max_n + 1}, {hi}]"
            )

    def window(self, lo: int, hi: int) -> np.ndarray:
        self.require(hi)
        return self.values[lo : hi + 1]

    def items(self) -> Iterator[tuple[int, int]]:
        return enumerate(self.values[1:].tolist(), start=1)


def _odd_chunk(lo: int, hi: int, max_residues: int) -> list[int]:
    start = lo | 1
    return [fast_min_weight(n, max_residues)[0] for n in range(start, hi + 1, 2)]


def _chunks(lo: int, hi: int, size: int) -> list[tuple[int, int]]:
    return [(a, min(a + size - 1, hi)) for a in range(lo, hi + 1, size)]


def sweep(
    lo: int,
    hi: int,
    threads: int = 1,
    cache: ValueCache | None = None,
    chunk_size: int = DEFAULT_CHUNK,
    max_residues: int = DEFAULT_MAX_RESIDUES,
    on_chunk: Callable[[ValueCache], None] | None = None,
) -> ValueCache:
    """Extend ``cache`` so it covers [1, hi].

    Workers compute the odd n of fixed-size chunks; a single merger writes
    results in ascending order and fills even n from their odd parts.  The
    output does not depend on ``threads``.  ``on_chunk`` is called with the
    partially extended cache after every merged chunk (for checkpointing).
    """
    if lo < 1 or hi < lo:
        raise ValueError(f"bad sweep range [{lo}, {hi}]")
    if threads < 1:
        raise ValueError("threads must be >= 1")
    cache = cache if cache is not None else ValueCache()
    if lo > cache.max_n + 1:
        raise CacheError(
            f"sweep start {lo} leaves a gap after cache end {cache.max_n}"
        )
    start = cache.max_n + 1
    if hi < start:
        return cache

    values = np.zeros(hi + 1, np.uint8)
    values[:start] = cache.values
    jobs = _chunks(start, hi, chunk_size)

    def merge_chunk(a: int, b: int, odd_vals: list[int]) -> None:
        seg = values[a : b + 1]
        first_odd = (a | 1) - a
        seg[first_odd::2] = odd_vals
        for n in range(a + (a & 1), b + 1, 2):
            # odd part of n is smaller than n, so it is already merged
            values[n] = values[n >> ((n & -n).bit_length() - 1)]
        if on_chunk is not None:
            on_chunk(ValueCache(values[: b + 1], cache.version))

    if threads == 1:
        for a, b in jobs:
            merge_chunk(a, b, _odd_chunk(a, b, max_residues))
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = pool.map(
                _odd_chunk,
                [a for a, _ in jobs],
                [b for _, b in jobs],
                [max_residues] * len(jobs),
            )
            for (a, b), odd_vals in zip(jobs, results):
                merge_chunk(a, b, odd_vals)
    return ValueCache(values, cache.version)


def dumps(cache: ValueCache) -> str:
    body = "".join(f"{n},{m}\n" for n, m in cache.items())
    return f"#mhw {cache.version} max={cache.max_n}\n" + body


def save(cache: ValueCache, path: str | Path) -> None:
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(dumps(cache), encoding="ascii", newline="\n")
    tmp.replace(path)


def loads(text: str) -> ValueCache:
    lines = text.split("\n")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "#mhw" or not header[2].startswith("max="):
        raise CacheFormatError(f"line 1: bad header {lines[0]!r}")
    if header[1] != FORMAT_VERSION:
        raise CacheFormatError(
            f"line 1: version {header[1]} not supported (expected {FORMAT_VERSION})"
        )
    try:
        max_n = int(header[2][4:])
    except ValueError:
        raise CacheFormatError(f"line 1: bad max field {header[2]!r}") from None
    if lines[-1] != "":
        raise CacheFormatError(f"line {len(lines)}: missing final newline")
    body = lines[1:-1]
    if len(body) != max_n:
        raise CacheFormatError(f"header says max={max_n} but file has {len(body)} entries")
    values = np.zeros(max_n + 1, np.uint8)
    for i, line in enumerate(body, start=1):
        parts = line.split(",")
        if len(parts) != 2 or not (parts[0].isdigit() and parts[1].isdigit()):
            raise CacheFormatError(f"line {i + 1}: malformed entry {line!r}")
        n, m = int(parts[0]), int(parts[1])
        if n != i:
            raise CacheFormatError(f"line {i + 1}: expected n={i}, found n={n}")
        if not 1 <= m <= 255:
            raise CacheFormatError(f"line {i + 1}: value {m} out of range")
        values[n] = m
    return ValueCache(values)


def load(path: str | Path) -> ValueCache:
    return loads(Path(path).read_text(encoding="ascii"))


def merge(a: ValueCache, b: ValueCache) -> ValueCache:
    """Union of two prefixes; they must agree wherever both are defined."""
    if a.version != b.version:
        raise CacheFormatError(f"cannot merge versions {a.version} and {b.version}")
    common = min(a.max_n, b.max_n)
    diff = np.flatnonzero(a.values[1 : common + 1] != b.values[1 : common + 1])
    if diff.size:
        n = int(diff[0]) + 1
        raise CacheError(
            f"caches disagree at n={n}: {int(a.values[n])} vs {int(b.values[n])}"
        )
    longer = a if a.max_n >= b.max_n else b
    return ValueCache(longer.values.copy(), longer.version)


def export_bfile(cache: ValueCache, path: str | Path) -> None:
    """Write the OEIS b-file form, ``n M(n)`` per line."""
    Path(path).write_text(
        "".join(f"{n} {m}\n" for n, m in cache.items()), encoding="ascii", newline="\n"
    )
