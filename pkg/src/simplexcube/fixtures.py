"""Imported reference numbers.

Everything here comes from outside the package (published tables or the
maximal-determinant literature).  Values that the package can recompute are
checked against these in the test suite; the rest are carried for reporting
only and never asserted.
"""

from __future__ import annotations

import math
from fractions import Fraction

# Maximal determinant h_n of an n x n (0,1)-matrix, n = 1..20 (OEIS A003432).
# h_1..h_5 are recomputed by exhaustive search; rows with n + 1 a Hadamard
# order follow from (n+1)^((n+1)/2) / 2^n.
H_N: dict[int, int] = {
    1: 1, 2: 1, 3: 2, 4: 3, 5: 5, 6: 9, 7: 32, 8: 56, 9: 144, 10: 320,
    11: 1458, 12: 3645, 13: 9477, 14: 25515, 15: 131072, 16: 327680,
    17: 1114112, 18: 3411968, 19: 19531250, 20: 56640625,
}

# Printed Legendre lower bound chi_n^{-1}(1/nu_n), n = 1..54, four decimals.
LEGENDRE_PRINTED: dict[int, float] = {
    1: 1.0, 2: 1.291, 3: 1.2492, 4: 1.3478, 5: 1.4284, 6: 1.5018, 7: 1.4678,
    8: 1.5626, 9: 1.6034, 10: 1.6699, 11: 1.6488, 12: 1.7086, 13: 1.7659,
    14: 1.8211, 15: 1.8108, 16: 1.8778, 17: 1.9156, 18: 1.965, 19: 1.9587,
    20: 2.0159, 21: 2.0588, 22: 2.1039, 23: 2.0958, 24: 2.1408, 25: 2.1847,
    26: 2.2278, 27: 2.2242, 28: 2.2768, 29: 2.3074, 30: 2.3487, 31: 2.3452,
    32: 2.3955, 33: 2.4259, 34: 2.4642, 35: 2.4601, 36: 2.5019, 37: 2.5348,
    38: 2.5722, 39: 2.5697, 40: 2.6056, 41: 2.641, 42: 2.6759, 43: 2.6747,
    44: 2.7179, 45: 2.743, 46: 2.7791, 47: 2.7756, 48: 2.8201, 49: 2.8413,
    50: 2.8805, 51: 2.8729, 52: 2.9173, 53: 2.9362, 54: 2.9735,
}


def g54_ehlich_bound() -> int:
    """Ehlich-Wojtas bound ``2 (m-1) (m-2)^((m-2)/2)`` for ``m = 54``.

    Attained at this order, so it gives ``h_53 = g_54 / 2^53`` exactly.
    """
    m = 54
    return 2 * (m - 1) * (m - 2) ** ((m - 2) // 2)


def nu_from_g(n: int, g: int) -> Fraction:
    """``nu_n = g_{n+1} / (2^n n!)``."""
    return Fraction(g, 2**n * math.factorial(n))


# Known values of xi_n, xi'_n, theta_n, theta'_n for n = 1..7.  Strings for
# entries that are intervals or irrational.
SMALL_N_VALUES: dict[int, tuple[str, Fraction, str, Fraction]] = {
    1: ("1", Fraction(1), "1", Fraction(1)),
    2: ("3*sqrt(5)/5+1", Fraction(4), "2*sqrt(5)/5+1", Fraction(3)),
    3: ("3", Fraction(3), "2", Fraction(2)),
    4: ("[4, (19+5*sqrt(13))/9]", Fraction(13, 3), "[11/5, 3*(4+sqrt(2))/7]", Fraction(7, 3)),
    5: ("5", Fraction(11, 2), "[7/3, 2.448804)", Fraction(13, 5)),
    6: ("[6, 6.0166)", Fraction(25, 4), "[17/7, 2.60014]", Fraction(3)),
    7: ("7", Fraction(7), "5/2", Fraction(5, 2)),
}

# Bounds from continuous nonconvex minimization; carried, never asserted.
IMPORTED_BOUNDS: dict[str, float] = {
    "xi_2": 3 * math.sqrt(5) / 5 + 1,
    "theta_2": 2 * math.sqrt(5) / 5 + 1,
    "xi_4_upper": (19 + 5 * math.sqrt(13)) / 9,
    "theta_4_upper": 3 * (4 + math.sqrt(2)) / 7,
    "theta_5_upper": 2.448804,
    "xi_6_upper": 6.0166,
    "theta_6_upper": 2.60014,
    "xi_8_upper": 8.1355,
    "xi_10_upper": 10.2342,
}

# Estimates of xi_n for n = 1..10: (lower, upper or None if exact)
XI_SMALL: dict[int, tuple[float, float | None]] = {
    1: (1, None), 2: (IMPORTED_BOUNDS["xi_2"], None), 3: (3, None),
    4: (4, IMPORTED_BOUNDS["xi_4_upper"]), 5: (5, None), 6: (6, 6.0166),
    7: (7, None), 8: (8, 8.1355), 9: (9, None), 10: (10, 10.2342),
}

# Minimal projector norm over known maximal-determinant simplices, with the
# number N of matrices examined, n = 1..27.
THETA_UPPER_SMALL: dict[int, tuple[Fraction, int]] = {
    1: (Fraction(1), 1), 2: (Fraction(3), 1), 3: (Fraction(2), 1),
    4: (Fraction(7, 3), 1), 5: (Fraction(13, 5), 1), 6: (Fraction(3), 1),
    7: (Fraction(5, 2), 1), 8: (Fraction(22, 7), 1), 9: (Fraction(3), 1),
    10: (Fraction(19, 5), 3), 11: (Fraction(3), 1), 12: (Fraction(17, 5), 1),
    13: (Fraction(49, 13), 1), 14: (Fraction(21, 5), 1), 15: (Fraction(7, 2), 5),
    16: (Fraction(21, 5), 3), 17: (Fraction(139, 34), 3), 18: (Fraction(95, 17), 3),
    19: (Fraction(4), 3), 20: (Fraction(137, 29), 7), 21: (Fraction(251, 50), 1),
    22: (Fraction(1817, 335), 1), 23: (Fraction(9, 2), 60), 24: (Fraction(103, 21), 2),
    25: (Fraction(5), 3), 26: (Fraction(474, 91), 1), 27: (Fraction(5), 487),
}
