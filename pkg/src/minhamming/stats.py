"""Exact averages of M over dyadic blocks, prime classes, and sturdy numbers.

All averages are ``Fraction`` values; decimals appear only when rendering.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from decimal import Context, Decimal
from fractions import Fraction
from pathlib import Path

from .arith import hamming_weight, mul_order2, order_is_even, primes_up_to
from .datastore import ValueCache
from .solver import min_weight

ExactRatio = Fraction

HASSE_DENSITY = Fraction(17, 24)


class IdentityError(AssertionError):
    """An exact identity between block averages failed: the data is corrupt."""


def render(x: Fraction, digits: int = 6) -> str:
    """Decimal string of ``x`` rounded to ``digits`` significant digits."""
    ctx = Context(prec=digits)
    return str(ctx.divide(Decimal(x.numerator), Decimal(x.denominator)))


@dataclass(frozen=True)
class DyadicStats:
    """Sums of M over the blocks [2**(j-1), 2**j - 1], j = 1..max_block.

    Lists are indexed by j; index 0 is unused and holds 0.
    """

    max_block: int
    block_sums: tuple[int, ...]
    odd_block_sums: tuple[int, ...]

    def cav(self, j: int) -> Fraction:
        return Fraction(self.block_sums[j], 2 ** (j - 1))

    def coav(self, j: int) -> Fraction:
        """Mean of M over the odd members of block j (there are max(1, 2**(j-2)))."""
        return Fraction(self.odd_block_sums[j], max(1, 2 ** (j - 2)))

    def cav_list(self) -> list[Fraction]:
        return [self.cav(j) for j in range(1, self.max_block + 1)]

    def coav_list(self) -> list[Fraction]:
        return [self.coav(j) for j in range(1, self.max_block + 1)]


def dyadic_stats(max_block: int, cache: ValueCache) -> DyadicStats:
    if max_block < 1:
        raise ValueError("max_block must be >= 1")
    cache.require(2**max_block - 1)
    blocks, odds = [0], [0]
    for j in range(1, max_block + 1):
        seg = cache.window(2 ** (j - 1), 2**j - 1).astype("int64")
        blocks.append(int(seg.sum()))
        # block starts at an even number except for j = 1
        odds.append(int(seg[1::2].sum()) if j > 1 else int(seg.sum()))
    return DyadicStats(max_block, tuple(blocks), tuple(odds))


def running_average(x: int, cache: ValueCache) -> Fraction:
    if x < 1:
        raise ValueError("x must be >= 1")
    return Fraction(int(cache.window(1, x).astype("int64").sum()), x)


@dataclass(frozen=True)
class TelescopingReport:
    max_block: int
    recursion_checked: int
    cumulative_checked: int
    odd_total: int

    def summary(self) -> str:
        return (
            f"identities hold for j <= {self.max_block}: "
            f"{self.recursion_checked} block recursions, "
            f"{self.cumulative_checked} cumulative sums "
            f"(odd-k total up to 2^{self.max_block} - 1 is {self.odd_total})"
        )


def telescoping_check(stats: DyadicStats) -> TelescopingReport:
    """Check, exactly, for every block j:

    * C(j) = C(j-1)/2 + CO(j)/2 for j >= 2, and
    * 2**j C(j) = 1 + sum_{i<=j} 2**(i-1) CO(i), whose right-hand side also
      equals twice the sum of M over the odd k < 2**j.

    Raises IdentityError on the first failure.
    """
    J = stats.max_block
    for j in range(2, J + 1):
        lhs = stats.cav(j)
        rhs = stats.cav(j - 1) / 2 + stats.coav(j) / 2
        if lhs != rhs:
            raise IdentityError(f"block recursion fails at j={j}: {lhs} != {rhs}")
        if stats.block_sums[j] != stats.odd_block_sums[j] + stats.block_sums[j - 1]:
            raise IdentityError(f"even halving fails at j={j}")
    weighted = Fraction(1)
    odd_total = 0
    for j in range(1, J + 1):
        weighted += 2 ** (j - 1) * stats.coav(j)
        odd_total += stats.odd_block_sums[j]
        if 2**j * stats.cav(j) != weighted:
            raise IdentityError(f"cumulative identity fails at j={j}")
        if weighted != 2 * odd_total:
            raise IdentityError(f"odd-sum numerator mismatch at j={j}")
    return TelescopingReport(J, max(0, J - 1), J, odd_total)


@dataclass(frozen=True)
class PrimeClassRecord:
    p: int
    mp: int
    order: int | None  # None for p = 2
    order_even: bool

    def __post_init__(self):
        if self.p > 2 and (self.mp == 2) != self.order_even:
            raise AssertionError(
                f"p={self.p}: M(p)={self.mp} but order {self.order} parity disagrees"
            )


def _lookup(n: int, cache: ValueCache | None) -> int:
    if cache is not None and n <= cache.max_n:
        return cache[n]
    return min_weight(n)


def classify_primes(limit: int, cache: ValueCache | None = None) -> list[PrimeClassRecord]:
    records = []
    for p in primes_up_to(limit):
        if p == 2:
            records.append(PrimeClassRecord(2, 1, None, False))
            continue
        order = mul_order2(p).order
        records.append(PrimeClassRecord(p, _lookup(p, cache), order, order % 2 == 0))
    return records


def prime_classes(records: list[PrimeClassRecord]) -> dict[int, list[int]]:
    """Partition primes by M(p): ``{k: [p, ...]}``."""
    classes: dict[int, list[int]] = {}
    for r in records:
        classes.setdefault(r.mp, []).append(r.p)
    return dict(sorted(classes.items()))


@dataclass(frozen=True)
class HasseResult:
    limit: int
    even: int
    total: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.even, self.total) if self.total else Fraction(0)

    @property
    def target(self) -> Fraction:
        return HASSE_DENSITY

    @property
    def deviation(self) -> float:
        return abs(float(self.fraction - HASSE_DENSITY))


def hasse_fraction(limit: int) -> HasseResult:
    """Share of odd primes p <= limit for which 2 has even order mod p."""
    odd = [p for p in primes_up_to(limit) if p > 2]
    even = sum(order_is_even(p) for p in odd)
    return HasseResult(limit, even, len(odd))


def is_sturdy(n: int, cache: ValueCache | None = None) -> bool:
    return _lookup(n, cache) == hamming_weight(n)


def sturdy_family(s: int, k: int) -> int:
    """(2**(s*k) - 1) / (2**s - 1), i.e. k ones spaced s bits apart."""
    if s < 1 or k < 1:
        raise ValueError("s and k must be >= 1")
    n = (2 ** (s * k) - 1) // (2**s - 1)
    if not is_sturdy(n):
        raise AssertionError(f"family member {n} (s={s}, k={k}) is not sturdy")
    return n


def sturdy_numbers(limit: int, cache: ValueCache) -> list[int]:
    cache.require(limit)
    return [n for n in range(1, limit + 1) if cache[n] == hamming_weight(n)]


CAV_HEADER = ["j", "cav_num", "cav_den", "cav_decimal"]
PRIME_HEADER = ["p", "M", "order", "parity"]
STURDY_HEADER = ["n", "M", "weight"]


def write_cav_csv(stats: DyadicStats, path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CAV_HEADER)
        for j, c in enumerate(stats.cav_list(), start=1):
            w.writerow([j, c.numerator, c.denominator, render(c)])


def read_cav_csv(path: str | Path) -> list[tuple[int, Fraction]]:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return [(int(r["j"]), Fraction(int(r["cav_num"]), int(r["cav_den"]))) for r in rows]


def write_prime_csv(records: list[PrimeClassRecord], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(PRIME_HEADER)
        for r in records:
            parity = "" if r.order is None else ("even" if r.order_even else "odd")
            w.writerow([r.p, r.mp, "" if r.order is None else r.order, parity])


def read_prime_csv(path: str | Path) -> list[PrimeClassRecord]:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return [
        PrimeClassRecord(
            int(r["p"]),
            int(r["M"]),
            int(r["order"]) if r["order"] else None,
            r["parity"] == "even",
        )
        for r in rows
    ]


def write_sturdy_csv(ns: list[int], cache: ValueCache, path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(STURDY_HEADER)
        for n in ns:
            w.writerow([n, cache[n], hamming_weight(n)])
