"""Published reference values of M(n) used by the verification suites."""

from __future__ import annotations

# M(1)..M(32)
TABLE1 = (
    1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 2, 2, 2, 3, 4, 1,
    2, 2, 2, 2, 3, 2, 3, 2, 2, 2, 2, 3, 2, 4, 5, 1,
)

# M(1)..M(1000), 25 values per row, as published.
_MATRIX_ROWS = """
1 1 2 1 2 2 3 1 2 2 2 2 2 3 4 1 2 2 2 2 3 2 3 2 2
2 2 3 2 4 5 1 2 2 3 2 2 2 3 2 2 3 2 2 4 3 3 2 3 2
4 2 2 2 3 3 2 2 2 4 2 5 6 1 2 2 2 2 3 3 3 2 3 2 4
2 3 3 3 2 2 2 2 3 4 2 3 2 4 4 3 3 5 3 3 2 2 3 2 2
2 4 3 2 4 2 2 2 2 3 3 3 2 2 3 2 4 2 3 4 2 2 4 5 2
6 7 1 2 2 2 2 3 2 4 2 2 3 2 3 3 3 3 2 2 3 3 2 2 4
3 2 4 3 5 3 2 3 3 2 3 2 2 2 4 2 3 3 2 4 2 2 2 3 3
2 2 4 2 4 2 3 3 3 2 5 3 3 6 3 3 2 2 2 4 3 2 2 3 2
2 2 3 4 2 3 3 2 2 4 2 2 3 2 4 2 5 2 3 3 4 3 4 3 4
2 2 2 2 3 3 2 4 4 3 2 3 3 3 4 2 2 2 2 3 4 3 5 2 2
2 6 3 7 8 1 2 2 3 2 3 2 3 2 2 3 4 2 2 4 3 2 3 2 4
3 2 2 5 3 2 3 2 3 4 3 3 2 2 2 3 3 2 3 3 2 2 2 3 4
3 3 3 2 2 4 2 3 3 5 3 3 2 2 6 3 2 3 3 2 2 3 3 2 2
2 3 2 3 4 2 2 3 3 3 3 3 2 4 4 5 2 3 2 4 2 2 3 2 3
4 2 2 2 3 4 4 2 3 4 2 2 2 3 3 3 3 3 4 2 3 5 2 3 4
3 2 6 2 3 7 3 3 2 3 2 2 2 2 4 3 3 2 2 3 2 2 3 5 2
2 2 5 2 4 3 3 4 2 2 3 3 3 3 3 2 2 2 2 4 2 2 3 2 4
3 3 2 3 4 4 2 2 5 4 2 3 3 3 3 6 4 2 3 4 4 3 3 2 4
4 2 3 2 6 2 2 2 4 3 2 3 3 2 5 4 2 4 3 3 4 2 2 3 3
3 3 3 3 4 2 2 3 2 4 2 3 2 2 3 2 4 3 3 4 5 3 2 2 2
3 2 3 6 2 3 3 7 2 8 9 1 2 2 3 2 3 3 3 2 2 3 2 2 4
3 5 2 3 2 2 3 2 4 3 2 2 2 3 4 2 3 3 2 2 3 2 2 4 4
3 3 3 2 4 2 2 5 3 3 4 2 2 3 2 2 6 3 2 4 2 3 3 3 3
2 2 2 3 2 3 3 3 3 4 2 2 3 5 3 3 2 2 2 4 2 3 3 3 4
4 3 2 3 3 3 3 2 3 2 3 4 2 2 4 3 2 3 2 5 3 3 4 3 2
2 2 2 3 6 3 3 2 2 7 3 3 3 3 2 2 2 2 3 4 3 3 2 2 2
5 2 2 3 3 2 4 3 2 4 2 2 4 2 3 3 3 3 4 3 4 3 2 3 4
2 2 4 3 4 2 5 2 2 2 3 3 2 2 4 2 2 6 2 3 3 4 2 4 3
2 4 3 2 4 2 3 2 2 3 3 4 5 4 3 2 3 3 3 4 3 2 3 2 2
2 3 3 2 3 4 3 2 3 4 3 2 4 2 2 4 3 3 5 2 2 2 3 3 4
3 3 2 2 3 6 2 2 3 3 2 7 4 3 8 3 3 2 2 3 4 2 2 2 5
2 4 2 3 4 3 3 3 3 2 2 2 2 3 3 3 2 2 2 4 3 2 5 3 2
4 2 3 2 3 5 3 2 2 4 2 3 3 3 3 4 2 2 6 2 2 3 3 3 4
3 2 3 2 3 4 2 3 2 3 2 5 2 3 4 2 2 2 2 2 3 3 2 2 4
3 3 2 3 4 2 2 3 2 4 4 4 3 2 2 2 4 5 3 4 3 2 4 3 3
3 2 3 3 3 4 6 2 4 4 2 3 3 7 4 2 4 3 3 3 3 3 2 5 4
3 4 3 2 2 3 2 2 3 6 4 2 2 2 4 2 3 4 3 3 2 2 3 3 2
3 3 2 2 5 3 4 3 2 4 4 3 3 3 3 2 4 3 2 6 2 2 3 4 3
3 3 2 3 3 3 3 3 3 4 5 2 2 2 3 3 3 2 4 4 2 2 3 3 4
2 2 2 4 3 4 2 3 4 2 3 3 3 3 4 3 5 2 3 3 2 2 2 4 2
"""

MATRIX_1000 = tuple(int(tok) for tok in _MATRIX_ROWS.split())

# Exact dyadic block averages C_av(1)..C_av(18), as (numerator, denominator).
CAV_FRACTIONS = (
    (1, 1), (3, 2), (2, 1), (9, 4), (39, 16), (21, 8), (45, 16), (183, 64),
    (47, 16), (761, 256), (3079, 1024), (3111, 1024), (6253, 2048),
    (25213, 8192), (25327, 8192), (101849, 32768), (12781, 4096),
    (410497, 131072),
)

CAV18_DECIMAL = "3.13184"
MAV_2_18_DECIMAL = "3.11846"

# Leading primes p with M(p) = 3.
P3_PREFIX = (7, 23, 47, 71)

HASSE_DENSITY = (17, 24)

assert len(MATRIX_1000) == 1000
assert MATRIX_1000[:32] == TABLE1
