"""Breadth-first search for M(n) over sums of powers of two modulo n.

For odd n > 1 a multiple of n with weight m is the same thing as m powers of
two (with repetition allowed) summing to 0 mod n.  Fixing one term as 2**0,
the search looks for the fewest elements of the subgroup <2> mod n that sum
to n - 1, and adds one.

Reached residues are kept in a dense ``uint8`` array holding the level at
which each residue was first reached (0 means unreached).  Every level set
is closed under doubling, so a level is expanded orbit by orbit: for each
frontier residue x, the orbit of x + 1 under doubling is exactly the set of
new sums x' + 2**i contributed by the orbit of x.  Each residue is therefore
touched O(1) times per run.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .arith import hamming_weight, mersenne_exponent, odd_part

DEFAULT_MAX_RESIDUES = 1 << 26


class SolverSizeError(ValueError):
    """The odd part of n needs more working memory than the configured cap."""


@njit(cache=True, nogil=True)
def _powers_of_two(n):
    out = np.empty(n, np.int64)
    w = 1
    k = 0
    while True:
        out[k] = w
        k += 1
        w = w * 2 % n
        if w == 1:
            break
    return out[:k].copy()


@njit(cache=True, nogil=True)
def _probe(level, elems, target, n):
    # index of the first subgroup element a with target - a already reached
    for i in range(elems.shape[0]):
        u = target - elems[i]
        if u < 0:
            u += n
        if level[u] != 0:
            return i
    return -1


@njit(cache=True, nogil=True)
def _expand(level, frontier, n, r):
    out = np.empty(n, np.int64)
    k = 0
    for i in range(frontier.shape[0]):
        y = frontier[i] + 1
        if y == n:
            y = 0
        if level[y] == 0:
            z = y
            while level[z] == 0:
                level[z] = r
                out[k] = z
                k += 1
                z = 2 * z
                if z >= n:
                    z -= n
    return out[:k].copy()


@dataclass(frozen=True)
class PowerSubgroup:
    """The cyclic group {2**i mod n}; ``elements[i] == 2**i % n``."""

    modulus: int
    elements: np.ndarray

    @classmethod
    def build(cls, n: int) -> PowerSubgroup:
        if n < 3 or n % 2 == 0:
            raise ValueError(f"power subgroup needs an odd modulus >= 3, got {n}")
        return cls(n, _powers_of_two(n))

    @property
    def order(self) -> int:
        return int(self.elements.shape[0])

    def __contains__(self, residue: int) -> bool:
        return bool(np.any(self.elements == residue % self.modulus))


@dataclass
class LevelState:
    """Residues reachable as sums of at most ``level`` subgroup elements.

    ``reached[z]`` is the smallest number of terms summing to z (0 when z is
    not reachable yet); ``frontier`` lists the residues first reached at
    ``level``.
    """

    reached: np.ndarray
    frontier: np.ndarray
    level: int

    @classmethod
    def initial(cls, subgroup: PowerSubgroup) -> LevelState:
        reached = np.zeros(subgroup.modulus, np.uint8)
        reached[subgroup.elements] = 1
        return cls(reached, subgroup.elements.copy(), 1)

    def reached_set(self) -> set[int]:
        return set(np.flatnonzero(self.reached).tolist())


def expand_level(
    state: LevelState, subgroup: PowerSubgroup, target: int | None
) -> tuple[LevelState, bool]:
    """Advance ``state`` by one summand.

    If ``target`` is reachable with ``state.level + 1`` terms the expansion
    stops at once and ``(state, True)`` is returned unchanged.  Pass
    ``target=None`` to always expand.  ``state.reached`` is updated in place.
    """
    n = subgroup.modulus
    if target is not None and _probe(state.reached, subgroup.elements, target % n, n) >= 0:
        return state, True
    r = state.level + 1
    new = _expand(state.reached, state.frontier, n, r)
    if new.shape[0] == 0 and target is not None:
        raise AssertionError(f"search for n={n} saturated without reaching {target}")
    return LevelState(state.reached, new, r), False


def _search(n: int, max_residues: int) -> tuple[PowerSubgroup, LevelState, int]:
    """Run the level search on odd n >= 3; return (A, final state, M(n))."""
    if n > max_residues:
        raise SolverSizeError(
            f"odd part {n} exceeds the solver cap of {max_residues} residues"
        )
    subgroup = PowerSubgroup.build(n)
    state = LevelState.initial(subgroup)
    target = n - 1
    if state.reached[target]:
        return subgroup, state, 2
    while True:
        state, found = expand_level(state, subgroup, target)
        if found:
            return subgroup, state, state.level + 2
        if state.level > n:
            raise AssertionError(f"level bound exceeded for n={n}")


def min_weight(n: int, max_residues: int = DEFAULT_MAX_RESIDUES) -> int:
    """M(n): the least Hamming weight of a positive multiple of ``n``."""
    if n < 1:
        raise ValueError("min_weight needs n >= 1")
    m, _ = odd_part(n)
    if m == 1:
        return 1
    p = mersenne_exponent(m)
    if p is not None:
        return p
    return _search(m, max_residues)[2]


@dataclass(frozen=True)
class Witness:
    """A multiple ``multiplier * n`` written as ``sum(2**a for a in exponents)``."""

    n: int
    exponents: tuple[int, ...]
    multiplier: int

    @property
    def weight(self) -> int:
        return len(self.exponents)

    @property
    def value(self) -> int:
        return sum(1 << a for a in self.exponents)

    def verify(self) -> bool:
        ex = self.exponents
        if any(a >= b for a, b in zip(ex, ex[1:])) or (ex and ex[0] < 0):
            return False
        total = self.value
        return total % self.n == 0 and total // self.n == self.multiplier

    def __str__(self):
        terms = " + ".join(f"2^{a}" for a in reversed(self.exponents))
        return f"{terms} = {self.multiplier} * {self.n}"


def _backtrack(subgroup: PowerSubgroup, state: LevelState, terms: int) -> list[int]:
    """Subgroup indices of ``terms`` elements summing to n - 1.

    At each step the lowest index whose predecessor sits exactly one level
    lower is taken, so witnesses are reproducible.
    """
    n = subgroup.modulus
    elems = subgroup.elements
    level = state.reached
    cur = n - 1
    picked = []
    for lev in range(terms, 1, -1):
        cand = (cur - elems) % n
        i = int(np.flatnonzero(level[cand] == lev - 1)[0])
        picked.append(i)
        cur = int(cand[i])
    picked.append(int(np.flatnonzero(elems == cur)[0]))
    return picked


def min_weight_with_witness(n: int, max_residues: int = DEFAULT_MAX_RESIDUES) -> Witness:
    if n < 1:
        raise ValueError("min_weight_with_witness needs n >= 1")
    m, shift = odd_part(n)
    p = mersenne_exponent(m)  # also covers m == 1
    if p is not None:
        # 2**p - 1 is itself a minimal multiple
        exponents = [i + shift for i in range(p)]
    else:
        subgroup, state, weight = _search(m, max_residues)
        order = subgroup.order
        indices = [0] + _backtrack(subgroup, state, weight - 1)
        # j extra periods on the j-th term: same residue, distinct exponents
        exponents = [e + j * order + shift for j, e in enumerate(indices)]
    total = sum(1 << a for a in exponents)
    k, rem = divmod(total, n)
    if rem:
        raise AssertionError(f"witness for {n} leaves remainder {rem}")
    w = Witness(n, tuple(exponents), k)
    if hamming_weight(total) != len(exponents):
        raise AssertionError(f"witness exponents for {n} collide")
    return w
