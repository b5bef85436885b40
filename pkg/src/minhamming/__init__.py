"""Minimal Hamming weight of multiples: M(n) = min over k >= 1 of s2(k n)."""

from .arith import (
    Factorization,
    OrderRecord,
    dedekind_psi,
    euler_phi,
    factorize,
    hamming_weight,
    is_prime,
    mersenne_exponent,
    mobius,
    mul_order2,
    odd_part,
    omega,
    primes_up_to,
    v_p,
    wieferich_exponent,
)
from .composition import (
    ReductionTrace,
    coprime_order_exact,
    fast_min_weight,
    prime_power_reduce,
    product_bounds,
    product_upper_bound,
)
from .datastore import ValueCache, load, merge, save, sweep
from .solver import (
    LevelState,
    PowerSubgroup,
    SolverSizeError,
    Witness,
    expand_level,
    min_weight,
    min_weight_with_witness,
)

__version__ = "0.1.0"
