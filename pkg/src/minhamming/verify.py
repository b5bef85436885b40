"""Named verification suites run by ``minhamming verify`` and the test suite."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from .arith import is_prime, mul_order2
from .composition import fast_min_weight
from .datastore import ValueCache
from .reference import MATRIX_1000, TABLE1
from .solver import min_weight


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.name}: {self.checked} checks, "
            f"{len(self.failures)} failures, {self.elapsed:.2f}s"
        )


def _against_reference(name: str, expected: tuple[int, ...], cache: ValueCache | None) -> SuiteResult:
    res = SuiteResult(name)
    for n, want in enumerate(expected, start=1):
        got = min_weight(n)
        res.checked += 1
        if got != want:
            res.failures.append(f"M({n}) = {got}, published {want}")
        if cache is not None and n <= cache.max_n:
            res.checked += 1
            if cache[n] != want:
                res.failures.append(f"cache has M({n}) = {cache[n]}, published {want}")
    return res


def table1(cache: ValueCache | None = None) -> SuiteResult:
    return _against_reference("table1", TABLE1, cache)


def matrix1000(cache: ValueCache | None = None) -> SuiteResult:
    return _against_reference("matrix1000", MATRIX_1000, cache)


def lemmas(limit: int = 300, cache: ValueCache | None = None) -> SuiteResult:
    """Sandwich bounds and the coprime-order equality over odd coprime a <= b <= limit."""
    res = SuiteResult("lemmas")
    odds = range(1, limit + 1, 2)
    m = {a: min_weight(a) for a in odds}
    order = {a: mul_order2(a).order for a in odds}

    def value(n):
        if cache is not None and n <= cache.max_n:
            return cache[n]
        return min_weight(n)

    for a in odds:
        for b in range(a, limit + 1, 2):
            if math.gcd(a, b) != 1:
                continue
            mab = value(a * b)
            lo, hi = max(m[a], m[b]), m[a] * m[b]
            res.checked += 1
            if not lo <= mab <= hi:
                res.failures.append(f"M({a}*{b}) = {mab} outside [{lo}, {hi}]")
            if math.gcd(order[a], order[b]) == 1:
                res.checked += 1
                if mab != lo:
                    res.failures.append(f"M({a}*{b}) = {mab} but coprime orders give {lo}")
    return res


def theorem2(prime_limit: int = 50, max_k: int = 3, bound: int = 1 << 14) -> SuiteResult:
    """M(p**k) == M(p) for odd primes p <= prime_limit, k <= max_k, p**k <= bound."""
    res = SuiteResult("theorem2")
    for p in range(3, prime_limit + 1, 2):
        if not is_prime(p):
            continue
        mp = min_weight(p)
        for k in range(2, max_k + 1):
            if p**k > bound:
                break
            res.checked += 1
            mpk = min_weight(p**k)
            if mpk != mp:
                res.failures.append(f"M({p}^{k}) = {mpk} != M({p}) = {mp}")
    return res


def oracle(limit: int = 1 << 14) -> SuiteResult:
    """The factorization dispatcher agrees with plain search on 1..limit."""
    res = SuiteResult("oracle")
    for n in range(1, limit + 1):
        fast, trace = fast_min_weight(n)
        slow = min_weight(n)
        res.checked += 1
        if fast != slow:
            res.failures.append(f"n={n}: dispatcher {fast}, search {slow}")
        elif trace.replay() != fast:
            res.failures.append(f"n={n}: trace replay disagrees")
    return res


SUITES = {
    "table1": lambda cache: table1(cache),
    "matrix1000": lambda cache: matrix1000(cache),
    "lemmas": lambda cache: lemmas(cache=cache),
    "theorem2": lambda cache: theorem2(),
    "oracle": lambda cache: oracle(),
}


def run_suite(name: str, cache: ValueCache | None = None) -> SuiteResult:
    t0 = time.perf_counter()
    res = SUITES[name](cache)
    res.elapsed = time.perf_counter() - t0
    return res
