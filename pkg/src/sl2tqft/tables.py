"""Literal operator tables for SL(2, C) on the core module.

Convention: every matrix below is written row by row, and entry (row i,
column j) is the coefficient of generator i in the image of generator j, so
column j is the image of generator j. Generator order:

    T1, Tm1, Tp, Tm, TB, S2, Sm2, S2Sm2

The convention is pinned by the anchor entries in :mod:`sl2tqft.operators`
(for instance, the image of T1 under the J+ tube has Tp-coefficient
(q^3 - q)(q^2 - 1)). Transposing any table breaks at least one anchor.

Only tables printed in full are transcribed here. The reduced genus tube is
derived as ZG_L @ eta^-1 in :mod:`sl2tqft.operators`.
"""

from .ring import q

SL2 = q**3 - q
"""Class of SL(2, C)."""

_ = 0

# eta = tr_! tr^*, given by its images.
ETA = [
    [1, _, _, _, _, _, _, _],
    [_, 1, _, _, _, _, _, _],
    [_, _, q**2 - 1, _, _, _, _, _],
    [_, _, _, q**2 - 1, _, _, _, _],
    [_, _, _, _, q**2, _, _, q],
    [_, _, _, _, _, q**2, q, _],
    [_, _, _, _, _, q, q**2, _],
    [_, _, _, _, q, _, _, q**2],
]

# sigma_!, induced by A -> -A.
SIGMA = [
    [_, 1, _, _, _, _, _, _],
    [1, _, _, _, _, _, _, _],
    [_, _, _, 1, _, _, _, _],
    [_, _, 1, _, _, _, _, _],
    [_, _, _, _, 1, _, _, _],
    [_, _, _, _, _, _, 1, _],
    [_, _, _, _, _, 1, _, _],
    [_, _, _, _, _, _, _, 1],
]

# Reduced tube with a -Id marked point; printed prefactor (q^3 - q).
CZ_MINUS_ID_PREFACTOR = SL2
CZ_MINUS_ID = [
    [_, 1, _, _, _, _, _, _],
    [1, _, _, _, _, _, _, _],
    [_, _, _, 1, _, _, _, _],
    [_, _, 1, _, _, _, _, _],
    [_, _, _, _, 1, _, _, _],
    [_, _, _, _, _, _, 1, _],
    [_, _, _, _, _, 1, _, _],
    [_, _, _, _, _, _, _, 1],
]

# Reduced tube with a [J+] marked point; printed prefactor (q^3 - q).
CZ_JPLUS_PREFACTOR = SL2
CZ_JPLUS = [
    [_, _, 1, _, _, _, _, _],
    [_, _, _, 1, _, _, _, _],
    [q**2 - 1, _, q - 2, q, (q - 1)**2, -q + 1, -q + 1, -2*q + 2],
    [_, q**2 - 1, q, q - 2, (q - 1)**2, -q + 1, -q + 1, -2*q + 2],
    [_, _, q, q, q**2 - 2*q, -q + 1, -q + 1, -q + 2],
    [_, _, _, _, _, -1, q, _],
    [_, _, _, _, _, q, -1, _],
    [_, _, _, _, q, _, _, -1],
]

# Reduced tube with a [J-] marked point; printed prefactor (q^3 - q).
CZ_JMINUS_PREFACTOR = SL2
CZ_JMINUS = [
    [_, _, _, 1, _, _, _, _],
    [_, _, 1, _, _, _, _, _],
    [_, q**2 - 1, q, q - 2, q**2 - 2*q + 1, -q + 1, -q + 1, -2*q + 2],
    [q**2 - 1, _, q - 2, q, q**2 - 2*q + 1, -q + 1, -q + 1, -2*q + 2],
    [_, _, q, q, q**2 - 2*q, -q + 1, -q + 1, -q + 2],
    [_, _, _, _, _, q, -1, _],
    [_, _, _, _, _, -1, q, _],
    [_, _, _, _, q, _, _, -1],
]

# Unreduced genus tube; printed prefactor (q^3 - q)^2.
# The printed (Tm, Sm2) entry reads "-q^4 + 2q^3 - 4q^2 + 3" followed by a
# stray "q"; it is read as -q^4 + 2q^3 - 4q^2 + 3q, the mirror of (Tp, S2).
ZG_L_PREFACTOR = SL2**2
ZG_L = [
    [q + 4, 1, q**2 - 2*q - 3, q**2 + 3*q, q**3 - 2*q**2 - 3*q - 2,
     -q**2 - 4*q - 1, 2*q**2 - 7*q - 1, -5*q - 1],
    [1, q + 4, q**2 + 3*q, q**2 - 2*q - 3, q**3 - 2*q**2 - 3*q - 2,
     2*q**2 - 7*q - 1, -q**2 - 4*q - 1, -5*q - 1],
    [q**2 - 2*q - 3, q**2 + 3*q, q**4 + q**3 + 3*q + 3, q**4 - 3*q**2 - 6*q,
     q**5 - 2*q**4 - 3*q**3 + q**2 + 3*q, -q**4 + 2*q**3 - 4*q**2 + 3*q,
     -q**4 - q**3 - 4*q**2 + 6*q, -2*q**3 - q**2 + 3*q],
    [q**2 + 3*q, q**2 - 2*q - 3, q**4 - 3*q**2 - 6*q, q**4 + q**3 + 3*q + 3,
     q**5 - 2*q**4 - 3*q**3 + q**2 + 3*q, -q**4 - q**3 - 4*q**2 + 6*q,
     -q**4 + 2*q**3 - 4*q**2 + 3*q, -2*q**3 - q**2 + 3*q],
    [q**2 + 1, q**2 + 1, q**4 - 2*q**2, q**4 - 2*q**2,
     q**5 - 2*q**4 - q**3 + 2*q**2 - 2, -q**4 - q**3 + q**2 - q - 1,
     -q**4 - q**3 + q**2 - q - 1, -2*q**3 + q**2 - 2*q - 1],
    [_, 3*q, 3*q**2, -3*q, -3*q**2, 4*q**3 - 6*q**2, -4*q**2, -3*q**2],
    [3*q, _, -3*q, 3*q**2, -3*q**2, -4*q**2, 4*q**3 - 6*q**2, -3*q**2],
    [q, q, q**3, q**3, q**4 - 2*q**3 - q**2 - 2*q,
     -q**3 - q**2 - q, -q**3 - q**2 - q, q**3 - 2*q**2 - q],
]
