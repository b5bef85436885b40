"""Exact reductions of M(n) through factorization, plus a dispatcher.

Facts used, for odd a, b:

* M(a) and M(b) both lower-bound M(ab), and M(a) * M(b) upper-bounds it.
* If gcd(a, b) = 1 and the orders of 2 modulo a and b are coprime, then
  M(ab) = max(M(a), M(b)).
* For an odd prime p with p**e exactly dividing 2**(p-1) - 1,
  M(p**k) = M(p**min(k, e)).

The dispatcher only returns values backed by the exact statements; the
product bound is recorded in the trace for diagnostics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arith import factorize, is_prime, mersenne_exponent, mul_order2, odd_part, wieferich_exponent
from .solver import DEFAULT_MAX_RESIDUES, min_weight


@dataclass(frozen=True)
class EvenStrip:
    n: int
    odd: int
    shift: int

    def describe(self):
        return f"M({self.n}) = M({self.odd})  [drop factor 2^{self.shift}]"


@dataclass(frozen=True)
class MersenneShortcut:
    n: int
    p: int

    def describe(self):
        return f"M({self.n}) = {self.p}  [{self.n} = 2^{self.p} - 1]"


@dataclass(frozen=True)
class PrimePowerCollapse:
    p: int
    k: int
    k_reduced: int

    def describe(self):
        return (
            f"M({self.p}^{self.k}) = M({self.p}^{self.k_reduced})"
            f"  [{self.p}^{self.k_reduced} || 2^{self.p - 1} - 1]"
        )


@dataclass(frozen=True)
class CoprimeOrderSplit:
    a: int
    b: int
    order_a: int
    order_b: int

    def describe(self):
        return (
            f"M({self.a * self.b}) = max(M({self.a}), M({self.b}))"
            f"  [orders {self.order_a}, {self.order_b} coprime]"
        )


@dataclass(frozen=True)
class ProductBound:
    a: int
    b: int
    lower: int
    upper: int

    def describe(self):
        return f"{self.lower} <= M({self.a * self.b}) <= {self.upper}  [diagnostic]"


@dataclass(frozen=True)
class BfsFallback:
    n: int
    m: int

    def describe(self):
        return f"M({self.n}) = {self.m}  [search]"


Step = EvenStrip | MersenneShortcut | PrimePowerCollapse | CoprimeOrderSplit | ProductBound | BfsFallback


@dataclass
class ReductionTrace:
    n: int
    steps: list = field(default_factory=list)
    result: int = 0

    def replay(self) -> int:
        """Recompute M(n) from the recorded steps alone."""
        rules: dict[int, Step] = {}
        for s in self.steps:
            if isinstance(s, EvenStrip):
                rules[s.n] = s
            elif isinstance(s, (MersenneShortcut, BfsFallback)):
                rules[s.n] = s
            elif isinstance(s, PrimePowerCollapse):
                rules[s.p**s.k] = s
            elif isinstance(s, CoprimeOrderSplit):
                if math.gcd(s.a, s.b) != 1 or math.gcd(s.order_a, s.order_b) != 1:
                    raise ValueError(f"invalid split step {s}")
                rules[s.a * s.b] = s

        def value(x: int) -> int:
            if x == 1:
                return 1
            s = rules[x]
            if isinstance(s, EvenStrip):
                return value(s.odd)
            if isinstance(s, MersenneShortcut):
                return s.p
            if isinstance(s, BfsFallback):
                return s.m
            if isinstance(s, PrimePowerCollapse):
                return value(s.p**s.k_reduced)
            return max(value(s.a), value(s.b))

        return value(self.n)

    def render_text(self) -> str:
        lines = [f"M({self.n}) = {self.result}"]
        lines += [f"  {i}. {s.describe()}" for i, s in enumerate(self.steps, 1)]
        return "\n".join(lines)

    def render_lines(self) -> str:
        out = []
        for s in self.steps:
            fields = " ".join(f"{k}={v}" for k, v in vars(s).items())
            out.append(f"{type(s).__name__} {fields}")
        out.append(f"Result n={self.n} m={self.result}")
        return "\n".join(out)


def product_upper_bound(a: int, b: int) -> int:
    return min_weight(a) * min_weight(b)


def product_bounds(a: int, b: int) -> tuple[int, int]:
    """(lower, upper) bounds for M(ab) from M(a) and M(b)."""
    ma, mb = min_weight(a), min_weight(b)
    return max(ma, mb), ma * mb


def coprime_order_exact(a: int, b: int) -> int | None:
    """M(ab) when a, b are coprime with coprime orders of 2; else None."""
    if a < 1 or b < 1 or a % 2 == 0 or b % 2 == 0:
        raise ValueError("coprime_order_exact needs odd positive inputs")
    if math.gcd(a, b) != 1:
        return None
    if math.gcd(mul_order2(a).order, mul_order2(b).order) != 1:
        return None
    return max(min_weight(a), min_weight(b))


def prime_power_reduce(p: int, k: int) -> int:
    """Smallest exponent k' with M(p**k) == M(p**k') guaranteed."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"prime_power_reduce needs an odd prime, got {p}")
    if k < 1:
        raise ValueError("k must be >= 1")
    return min(k, wieferich_exponent(p))


def _component_value(
    blocks: list[tuple[int, int, int]], trace: ReductionTrace, max_residues: int
) -> int:
    """M of the product of prime-power blocks (p, k, order) that cannot be split."""
    if len(blocks) == 1:
        p, k, _ = blocks[0]
        k2 = prime_power_reduce(p, k)
        if k2 != k:
            trace.steps.append(PrimePowerCollapse(p, k, k2))
        target = p**k2
    else:
        target = math.prod(p**k for p, k, _ in blocks)
    e = mersenne_exponent(target)
    if e is not None:
        trace.steps.append(MersenneShortcut(target, e))
        return e
    m = min_weight(target, max_residues)
    trace.steps.append(BfsFallback(target, m))
    return m


def _components(blocks: list[tuple[int, int, int]]) -> list[list[tuple[int, int, int]]]:
    # link blocks whose orders share a factor; components then have pairwise coprime orders
    parent = list(range(len(blocks)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            if math.gcd(blocks[i][2], blocks[j][2]) != 1:
                parent[find(i)] = find(j)
    groups: dict[int, list] = {}
    for i, b in enumerate(blocks):
        groups.setdefault(find(i), []).append(b)
    comps = list(groups.values())
    comps.sort(key=lambda c: (math.lcm(*(b[2] for b in c)), min(b[0] for b in c)))
    return comps


def fast_min_weight(
    n: int, max_residues: int = DEFAULT_MAX_RESIDUES
) -> tuple[int, ReductionTrace]:
    if n < 1:
        raise ValueError("fast_min_weight needs n >= 1")
    trace = ReductionTrace(n)
    m, v = odd_part(n)
    if v:
        trace.steps.append(EvenStrip(n, m, v))
    if m == 1:
        trace.result = 1
        return 1, trace
    e = mersenne_exponent(m)
    if e is not None:
        trace.steps.append(MersenneShortcut(m, e))
        trace.result = e
        return e, trace

    blocks = [(p, k, mul_order2(p**k).order) for p, k in factorize(m).factors]
    comps = _components(blocks)
    acc = acc_order = acc_value = None
    for comp in comps:
        value = _component_value(comp, trace, max_residues)
        size = math.prod(p**k for p, k, _ in comp)
        order = math.lcm(*(b[2] for b in comp))
        if acc is None:
            acc, acc_order, acc_value = size, order, value
            continue
        trace.steps.append(CoprimeOrderSplit(acc, size, acc_order, order))
        trace.steps.append(
            ProductBound(acc, size, max(acc_value, value), acc_value * value)
        )
        acc, acc_order, acc_value = acc * size, math.lcm(acc_order, order), max(acc_value, value)
    trace.result = acc_value
    return acc_value, trace
