"""Elementary number theory shared by the solver, the dispatcher and the statistics.

Everything here is a pure function of its arguments.  Inputs are bounded to
64-bit integers where factorization is involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

WORD_BOUND = 1 << 64
TRIAL_DIVISION_BOUND = 1 << 20
# Above this modulus the order is found by factoring phi instead of doubling.
DOUBLING_ORDER_LIMIT = 1 << 12
SIEVE_LIMIT_CAP = 10**9

# Deterministic for all n < 3.3e24, which covers the 64-bit range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factor list {self.factors}")
            last = p
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factors of {self.n} multiply to {prod}")

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def __len__(self):
        return len(self.factors)


@dataclass(frozen=True)
class OrderRecord:
    n: int
    order: int


def hamming_weight(n: int) -> int:
    if n < 0:
        raise ValueError("hamming_weight needs n >= 0")
    return bin(n).count("1")


def odd_part(n: int) -> tuple[int, int]:
    """Split ``n = m * 2**v`` with ``m`` odd; returns ``(m, v)``."""
    if n < 1:
        raise ValueError("odd_part needs n >= 1")
    v = (n & -n).bit_length() - 1
    return n >> v, v


def mersenne_exponent(n: int) -> int | None:
    """Return ``p`` if ``n == 2**p - 1`` (p >= 1), else None."""
    if n >= 1 and (n + 1) & n == 0:
        return n.bit_length()
    return None


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = odd_part(n - 1)
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    return tuple(primes_up_to(TRIAL_DIVISION_BOUND))


def _rho(n: int) -> int:
    """Find a nontrivial factor of the odd composite ``n`` (Brent's variant).

    The constant ``c`` walks 1, 2, 3, ... so the result is deterministic.
    """
    c = 1
    while True:
        y, r, q, g = 2, 1, 1, 1
        m = 128
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split(r, out)
        _split(r, out)
        return
    d = _rho(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int) -> Factorization:
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    if n >= WORD_BOUND:
        raise ValueError(f"{n} exceeds the 64-bit factorization bound")
    found: dict[int, int] = {}
    m = n
    for p in _small_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
    if m > 1:
        if m < TRIAL_DIVISION_BOUND**2:
            # no factor below sqrt(m) survived trial division
            found[m] = found.get(m, 0) + 1
        else:
            _split(m, found)
    return Factorization(n, tuple(sorted(found.items())))


def omega(n: int) -> int:
    return len(factorize(n))


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n).factors:
        result = result // p * (p - 1)
    return result


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac.factors):
        return 0
    return -1 if len(fac) % 2 else 1


def dedekind_psi(n: int) -> int:
    result = n
    for p, _ in factorize(n).factors:
        result = result // p * (p + 1)
    return result


def v_p(m: int, p: int) -> int:
    """Exponent of the prime ``p`` in ``m``."""
    if m < 1:
        raise ValueError("v_p needs m >= 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


def _order_by_doubling(n: int) -> int:
    if n == 1:
        return 1
    k, w = 1, 2 % n
    while w != 1:
        w = w * 2 % n
        k += 1
    return k


def _order_by_stripping(n: int) -> int:
    fac = factorize(n)
    phi_fac: dict[int, int] = {}
    for p, e in fac.factors:
        if e > 1:
            phi_fac[p] = phi_fac.get(p, 0) + e - 1
        for q, f in factorize(p - 1).factors:
            phi_fac[q] = phi_fac.get(q, 0) + f
    order = 1
    for q, f in phi_fac.items():
        order *= q**f
    for q in phi_fac:
        while order % q == 0 and pow(2, order // q, n) == 1:
            order //= q
    return order


def mul_order2(n: int) -> OrderRecord:
    """Multiplicative order of 2 modulo the odd number ``n``.

    ``mul_order2(1)`` is 1 by convention.  Small moduli are handled by
    repeated doubling, larger ones by factoring phi(n) and stripping primes.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"mul_order2 needs an odd positive modulus, got {n}")
    if n <= DOUBLING_ORDER_LIMIT:
        return OrderRecord(n, _order_by_doubling(n))
    return OrderRecord(n, _order_by_stripping(n))


def order_is_even(p: int) -> bool:
    """Parity of the order of 2 modulo an odd prime, without computing the order."""
    m, _ = odd_part(p - 1)
    return pow(2, m, p) != 1


def wieferich_exponent(p: int) -> int:
    """Exact power of ``p`` dividing ``2**(p-1) - 1``.

    Works modulo ``p**(e+1)``; the huge number itself is never formed.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"wieferich_exponent needs an odd prime, got {p}")
    e = 1
    while pow(2, p - 1, p ** (e + 1)) == 1:
        e += 1
    return e


def primes_up_to(limit: int) -> list[int]:
    if limit < 2:
        return []
    if limit > SIEVE_LIMIT_CAP:
        raise ValueError(f"sieve limit {limit} exceeds cap {SIEVE_LIMIT_CAP}")
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]
