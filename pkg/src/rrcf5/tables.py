"""Reference data: minimal polynomials p_d of the singular values r(w/5),
their discriminant factorizations, and assorted known polynomials used as
regression anchors by the pipeline and its tests.

Coefficient tuples are lowest degree first.  The private literals below are
written highest degree first (the natural order to proofread them in) and
reversed on module load.
"""

from __future__ import annotations


def _lo(coeffs_hi_first):
    return tuple(reversed(coeffs_hi_first))


# minimal polynomials p_d of r(w/5), 11 <= d <= 144, keyed by d
P_TABLE = {
    11: _lo([1, -1, 1, 1, 1]),
    16: _lo([1, -2, 0, 2, 1]),
    19: _lo([1, 1, 3, -1, 1]),
    24: _lo([1, -2, 1, -4, 3, 4, 1, 2, 1]),
    31: _lo([1, -1, 5, -4, 8, -2, 19, 2, 8, 4, 5, 1, 1]),
    36: _lo([1, 0, 1, -6, 9, 6, 1, 0, 1]),
    39: _lo([1, -3, 7, -9, 21, -15, 17, 3, 11, -3, 17, 15, 21, 9, 7, 3, 1]),
    44: _lo([1, -1, 6, 0, 15, 0, 9, 0, 15, 0, 6, 1, 1]),
    51: _lo([1, 1, 1, -7, 12, 7, 1, -1, 1]),
    56: _lo([1, 0, 8, -4, 15, -12, 50, 4, 91, -4, 50, 12, 15, 4, 8, 0, 1]),
    59: _lo([1, -4, 5, -2, 14, -2, -24, 2, 14, 2, 5, 4, 1]),
    64: _lo([1, 4, 10, 8, 12, -8, 10, -4, 1]),
    71: _lo([1, -6, 17, -45, 104, -164, 277, -357, 388, -319, 316, 135, -144,
             83, -551, -83, -144, -135, 316, 319, 388, 357, 277, 164, 104,
             45, 17, 6, 1]),
    76: _lo([1, -5, 12, -2, -21, 12, 35, -12, -21, 2, 12, 5, 1]),
    79: _lo([1, 0, 9, -12, 18, -9, 117, -33, 99, -207, 353, 207, 99, 33, 117,
             9, 18, 12, 9, 0, 1]),
    84: _lo([1, 2, -4, -12, 25, -18, 68, -112, 13, 112, 68, 18, 25, 12, -4,
             -2, 1]),
    91: _lo([1, 4, -1, -14, 23, 14, -1, -4, 1]),
    96: _lo([1, 4, 0, 0, 29, -24, 86, -32, 105, 32, 86, 24, 29, 0, 0, -4, 1]),
    99: _lo([1, 7, 15, 15, 16, -15, 15, -7, 1]),
    104: _lo([1, -4, 20, -40, 53, -28, 94, -92, 42, -76, 782, -328, -272,
              328, 782, 76, 42, 92, 94, 28, 53, 40, 20, 4, 1]),
    111: _lo([1, -4, 21, -31, 144, -180, 563, -435, 1398, -653, 2108, 380,
              4093, 1273, 4560, -990, 7975, 990, 4560, -1273, 4093, -380,
              2108, 653, 1398, 435, 563, 180, 144, 31, 21, 4, 1]),
    116: _lo([1, -6, 12, -24, 99, -58, 136, -256, 144, 410, 436, 274, -1192,
              -274, 436, -410, 144, 256, 136, 58, 99, 24, 12, 6, 1]),
    119: _lo([1, -1, 12, -51, 146, -248, 569, -951, 2005, -3810, 8702,
              -14440, 26580, -35295, 47491, -45351, 53426, -29809, 41387,
              -6812, 31769, 6812, 41387, 29809, 53426, 45351, 47491, 35295,
              26580, 14440, 8702, 3810, 2005, 951, 569, 248, 146, 51, 12,
              1, 1]),
    124: _lo([1, -7, 9, 8, 24, 6, -67, -6, 24, -8, 9, 7, 1]),
    131: _lo([1, 0, 20, 8, 48, 4, 72, 88, 348, 168, 446, -168, 348, -88, 72,
              -4, 48, -8, 20, 0, 1]),
    136: _lo([1, 6, 25, 24, -3, 0, 119, 174, 404, -174, 119, 0, -3, -24, 25,
              -6, 1]),
    139: _lo([1, -5, 12, 16, 33, 12, -55, -12, 33, -16, 12, 5, 1]),
    144: _lo([1, -2, 18, 24, 83, 78, 74, 40, 9, -40, 74, -78, 83, -24, 18,
              2, 1]),
}

# known prime factorizations of disc(p_d), keyed by d: {prime: exponent}
DISC_TABLE = {
    11: {5: 1, 11: 2},
    16: {2: 6, 5: 1},
    19: {5: 1, 19: 2},
    24: {2: 12, 3: 4, 5: 6},
    31: {3: 8, 5: 15, 31: 6},
    36: {2: 8, 3: 6, 5: 6, 11: 4},
    39: {3: 8, 5: 28, 7: 8, 13: 8},
    44: {2: 8, 5: 15, 11: 6, 19: 4},
    51: {2: 12, 3: 4, 5: 6, 17: 4},
    56: {2: 40, 5: 28, 7: 8, 31: 4},
    59: {2: 20, 5: 15, 59: 6},
    64: {2: 18, 3: 8, 5: 6},
    71: {5: 91, 7: 16, 23: 8, 71: 14},
    76: {2: 8, 3: 12, 5: 15, 19: 6},
    79: {3: 28, 5: 45, 29: 8, 79: 10},
    84: {2: 32, 3: 20, 5: 28, 7: 8, 59: 4},
    91: {2: 8, 3: 4, 5: 6, 7: 4, 13: 4},
    96: {2: 32, 3: 24, 5: 28, 71: 4},
    99: {2: 12, 3: 4, 5: 6, 11: 4},
    104: {2: 84, 5: 66, 13: 12, 29: 8, 79: 4},
    111: {3: 52, 5: 120, 11: 12, 37: 16, 43: 8, 61: 8},
    116: {2: 80, 5: 66, 7: 8, 29: 12, 41: 8},
    119: {5: 190, 7: 20, 11: 24, 17: 20, 19: 12, 23: 16, 47: 8},
    124: {3: 12, 5: 15, 11: 4, 31: 6},
    131: {2: 76, 5: 45, 31: 4, 131: 10},
    136: {2: 56, 3: 16, 5: 28, 11: 8, 17: 8},
    139: {2: 24, 3: 12, 5: 15, 139: 6},
    144: {2: 24, 3: 12, 5: 28, 7: 8, 11: 4, 19: 8},
}

TABLE1_DS = (11, 16, 19, 24, 31, 36, 39, 44, 51, 56, 59, 64, 71, 76, 79, 84,
             91, 96, 99)
TABLE2_DS = (104, 111, 116, 119, 124, 131, 136, 139, 144)

# class polynomials H_{-d} for small d, keyed by d
H_TABLE = {
    4: _lo([1, -1728]),
    11: _lo([1, 32**3]),
    16: _lo([1, -(66**3)]),
    19: _lo([1, 96**3]),
    24: _lo([1, -4834944, 14670139392]),
    36: _lo([1, -153542016, -1790957481984]),
    51: _lo([1, 5541101568, 6262062317568]),
    64: _lo([1, -82226316240, -7367066619912]),
    91: _lo([1, 10359073013760, -3845689020776448]),
    99: _lo([1, 37616060956672, -56171326053810176]),
}

# minimal polynomials R_d of z = b - 1/b, keyed by d
R_TABLE = {
    11: _lo([1, 4, 48]),
    16: _lo([1, 18, 202]),
    19: _lo([1, 36, 400]),
    24: _lo([1, -12, 20, 3120, 16912]),
    36: _lo([1, 60, 3020, 51984, 287248]),
    51: _lo([1, -24, 6800, 155136, 852736]),
    64: _lo([1, -216, 17234, 430380, 2362354]),
    91: _lo([1, -216, 154448, 3449088, 18965248]),
    99: _lo([1, 872, 292624, 6230016, 34284288]),
    84: _lo([1, -468, 81124, 3053232, 65642496, 1156633920, 13586087488,
             88268813568, 244368064768]),
    96: _lo([1, 324, 230848, 5080248, 32351604, 88662672, 675333328,
             2681910144, 7697193232]),
}

# Q_d = x^{2h} R_d(x - 1/x) for the class-number-one cases
Q_TABLE = {
    11: _lo([1, 4, 46, -4, 1]),
    16: _lo([1, 18, 200, -18, 1]),
    19: _lo([1, 36, 398, -36, 1]),
}

# F_19 factors as (degree-4) * (degree-8)
F19_FACTORS = (
    _lo([1, 36, 398, -36, 1]),
    _lo([1, 0, 76, 0, -24474, 0, 76, 0, 1]),
)

# the degree-16 cofactor q_19 in Q_19(x^5) = p_19(x) q_19(x)
Q19_COFACTOR = _lo([1, -1, -2, 6, -2, 19, -5, -60, 96, 60, -5, -19, -2, -6,
                    -2, 1, 1])

# the d = 4 corpus: F_4 = (x^2+1)^2 (x^4+18x^3+74x^2-18x+1)^2
F4_FACTORS = (
    _lo([1, 0, 1]),
    _lo([1, 18, 74, -18, 1]),
)
F4_QUARTIC = _lo([1, 7, 4, 18, 1])  # the excluded quartic x^4+7x^3+4x^2+18x+1

# G_4(x^5) = (x^10+1)^2 (x^4+2x^3-6x^2-2x+1)^2 * (two octics)^2
G4_FACTORS = (
    _lo([1] + [0] * 9 + [1]),
    _lo([1, 2, -6, -2, 1]),
    _lo([1, 4, 17, 22, 5, -22, 17, -4, 1]),
    _lo([1, -6, 17, -18, 25, 18, 17, 6, 1]),
)

# zeta_20 power-basis coordinates (z^0..z^7) of the roots of the quartic
# square factor of F_4 (x^4+18x^3+74x^2-18x+1, i.e. F4_FACTORS[1])
F4_QUARTIC_ROOTS_Z20 = (
    (-4, 0, 0, 3, 1, 0, -1, -3),   # alpha_1
    (-5, -6, 0, 3, -1, -3, 1, 3),  # alpha_2
    (-4, 0, 0, -3, 1, 0, -1, 3),   # alpha_3
    (-5, 6, 0, -3, -1, 3, 1, -3),  # alpha_4
)
# fifth-power witnesses: alpha_1 alpha_2^2, alpha_1 alpha_3, alpha_1 alpha_4^3
F4_FIFTH_POWER_BASES = (
    (0, 0, 0, 1, 1, 0, -1, -1),    # alpha_1 alpha_2^2 = (this)^5
    None,                          # alpha_1 alpha_3 = -1 exactly
    (2, -2, 0, 0, 2, -1, -2, 2),   # alpha_1 alpha_4^3 = (this)^5
)

# zeta_20 power-basis coordinates of one root of each of the last three
# G4 factors (the quartic and the two octics), in factor order
G4_FACTOR_ROOTS_Z20 = (
    (0, 0, 0, -1, 1, 0, -1, 1),   # x_1, root of the quartic factor
    (0, -1, -1, 0, 1, 1, 0, 0),   # x_2, root of the first octic
    (0, 1, 1, 0, -1, 0, 1, 1),    # x_3, root of the second octic
)

# the real value e^{pi i/5} r((9+sqrt(-19))/2) has this minimal polynomial
# (a factor of G_19(x^5)); stored as the polynomial of the negated value
P19_TILDE_NEG = _lo([1, 16, 7, -22, -45, 22, 7, -16, 1])

# minimal polynomial over Q of r(3i) = zeta_5 r((8 + 6i)/2 / ... )  (d = 36)
M36 = _lo([1, 38, -240, -300, -235, -726, 92, -1840, -675, 1840, 92, 726,
           -235, 300, -240, -38, 1])

# m1 = factor of M36 over Q(sqrt 5): coefficients (rational, sqrt5) pairs,
# lowest degree first
M36_FACTOR_SQRT5 = (
    (1, 0), (-19, -11), (2, 3), (23, 5), (65, 30), (-23, -5), (2, 3),
    (19, 11), (1, 0),
)
# m2 with m1 = x^4 m2(x - 1/x), same encoding
M36_QUARTIC_SQRT5 = ((71, 36), (34, 28), (6, 3), (19, 11), (1, 0))


def class_number(d: int) -> int:
    """Degree of p_d is 4h; recover h from the table."""
    return (len(P_TABLE[d]) - 1) // 4
