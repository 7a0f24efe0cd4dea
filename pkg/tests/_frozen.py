"""Frozen reference data for the algebra tests.

Everything in this module was produced by an independent route (symbolic
Cayley-Dickson doubling and symbolic linear algebra), printed once, and
pasted here as literals.  Tests compare library output against these
values; nothing here is computed with the library under test.

Scalar symbols: entries are strings over {0, +-1, +-I, +-S, +-2S} with
I the imaginary unit and S = sqrt(2); parse_scalar turns them into exact
library scalars for comparison.
"""
from fractions import Fraction

from g2forge import ExactScalar

# ---------------------------------------------------------------------------
# Full product table of the eight real unit octonions (1, i, j, k, l, li,
# lj, lk): entry [r][c] = (index, sign) with  e_r e_c = sign * e_index.
# Derived by Cayley-Dickson doubling of the quaternions with (a,b)(c,d) =
# (ac + conj(d) b, d a + b conj(c)) and l = (0, 1).
TABLE1 = [
    [(0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (6, 1), (7, 1)],
    [(1, 1), (0, -1), (3, 1), (2, -1), (5, -1), (4, 1), (7, -1), (6, 1)],
    [(2, 1), (3, -1), (0, -1), (1, 1), (6, -1), (7, 1), (4, 1), (5, -1)],
    [(3, 1), (2, 1), (1, -1), (0, -1), (7, -1), (6, -1), (5, 1), (4, 1)],
    [(4, 1), (5, 1), (6, 1), (7, 1), (0, 1), (1, 1), (2, 1), (3, 1)],
    [(5, 1), (4, -1), (7, -1), (6, 1), (1, -1), (0, 1), (3, 1), (2, -1)],
    [(6, 1), (7, 1), (4, -1), (5, -1), (2, -1), (3, -1), (0, 1), (1, 1)],
    [(7, 1), (6, -1), (5, 1), (4, -1), (3, -1), (2, 1), (1, -1), (0, 1)],
]

# Signature of q on the imaginary units in the real basis.
Q_SIGNS_M = (1, 1, 1, -1, -1, -1, -1)

# ---------------------------------------------------------------------------
# Cross products in the weight bases: rows and columns run over weights
# (3, 2, 1, 0, -1, -2, -3) and entry [a][b] is the coefficient c in
# e_a x e_b = c * e_{a+b} (targets outside the weight range are 0 and the
# tables are consistent with that).

C_CROSS = [
    ["0", "0", "0", "-I", "S", "S", "-I"],
    ["0", "0", "S", "I", "0", "-I", "-S"],
    ["0", "-S", "0", "I", "I", "0", "-S"],
    ["I", "-I", "-I", "0", "I", "I", "-I"],
    ["-S", "0", "-I", "-I", "0", "-S", "0"],
    ["-S", "I", "0", "-I", "S", "0", "0"],
    ["I", "S", "S", "I", "0", "0", "0"],
]

R_CROSS = [
    ["0", "0", "0", "-1", "-S", "S", "-1"],
    ["0", "0", "S", "1", "0", "1", "-S"],
    ["0", "-S", "0", "1", "1", "0", "S"],
    ["1", "-1", "-1", "0", "1", "1", "-1"],
    ["S", "0", "-1", "-1", "0", "-S", "0"],
    ["-S", "-1", "0", "-1", "S", "0", "0"],
    ["1", "S", "-S", "1", "0", "0", "0"],
]

# Gram matrices are antidiagonal in the weight bases; these are the
# antidiagonal entries read top-right to bottom-left, i.e. q(e_a, e_-a)
# for a = 3, 2, 1, 0, -1, -2, -3.
C_GRAM_ANTIDIAG = (-1, 1, -1, 1, -1, 1, -1)
R_GRAM_ANTIDIAG = (1, 1, 1, -1, 1, 1, 1)

# ---------------------------------------------------------------------------
# Structure constants of the cross-product basis built from the model null
# triple (e_1, e_2, e_-3); same (a, b) -> coefficient layout as above.
NULL_FRAME = [
    ["0", "0", "0", "S", "2S", "2S", "1"],
    ["0", "0", "1", "-S", "0", "-1", "1"],
    ["0", "-1", "0", "-S", "1", "0", "1"],
    ["-S", "S", "S", "0", "-S", "-S", "S"],
    ["-2S", "0", "-1", "S", "0", "2S", "0"],
    ["-2S", "1", "0", "S", "-2S", "0", "0"],
    ["-1", "-1", "-1", "-S", "0", "0", "0"],
]

# The cross-product frame grown from the (i, j, l) triple is the real unit
# basis itself, in order.
PQR_FRAME_NAMES = ("i", "j", "k", "l", "li", "lj", "lk")

# Independent count of the derivation algebra dimension: the Leibniz
# constraint matrix on 7x7 unknowns has rank 35, nullity 14.
LEIBNIZ_RANK = 35
G2_DIMENSION = 14

# ---------------------------------------------------------------------------
# Characteristic polynomial data of the two-parameter family
# conj(a) E_alpha + a E_-alpha + conj(b) E_beta + b E_-beta:
# char(X) = X^7 - A X^5 + (A^2/4) X^3 - C X with
# A = 2|a|^2 + 6|b|^2, C = 4 |a|^2 |b|^4 + 4 |b|^6, and the scale-free
# invariant I = 54 C / A^3.
REG_AT_ALPHA = Fraction(0)            # (a, b) = (1, 0)
REG_AT_BETA = Fraction(1)             # (a, b) = (0, 1)
REG_AT_5_3 = Fraction(243, 343)       # |a|^2 = 5, |b|^2 = 3

_S = ExactScalar.sqrt2()
_I = ExactScalar.i()
_ONE = ExactScalar.one()

_SYMBOLS = {
    "0": ExactScalar.zero(),
    "1": _ONE,
    "-1": -_ONE,
    "I": _I,
    "-I": -_I,
    "S": _S,
    "-S": -_S,
    "2S": _S + _S,
    "-2S": -(_S + _S),
}


def parse_scalar(text: str) -> ExactScalar:
    return _SYMBOLS[text]
