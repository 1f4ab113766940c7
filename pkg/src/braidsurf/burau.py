"""Reduced Burau representation, Alexander polynomials and determinants of
braid closures.

sigma_i maps to the identity except on rows/columns i-1, i, i+1 where it is

    [[1,  t, 0],
     [0, -t, 0],
     [0,  1, 1]]

(clipped at the edges), and a word maps to the product of its letters'
matrices in reading order. At t = -1 the row-vector action of sigma_i is the
Dehn twist along the lift of the straight arc between punctures i and i+1,
which is how :mod:`braidsurf.cover` uses it.
"""

from __future__ import annotations

from .braid import BraidWord, cycle_count, permutation
from .intlinalg import IntMatrix, identity
from .laurent import (
    ONE,
    ZERO,
    LaurentMatrix,
    LaurentPoly,
    det_laurent,
    exact_divide,
    geometric_sum,
    laurent_identity,
)

__all__ = [
    "reduced_burau",
    "burau_at_minus_one",
    "alexander_of_closure",
    "knot_determinant",
    "skew_form",
]

_T = LaurentPoly.monomial(1)
_MT = LaurentPoly.monomial(1, -1)
_TINV = LaurentPoly.monomial(-1)
_MTINV = LaurentPoly.monomial(-1, -1)


def _check(b: BraidWord):
    if b.strands < 2:
        raise ValueError("the reduced Burau representation needs m >= 2")


def reduced_burau(b: BraidWord) -> LaurentMatrix:
    """(m-1) x (m-1) reduced Burau matrix of ``b`` over Z[t, t^-1]."""
    _check(b)
    d = b.strands - 1
    M = laurent_identity(d)
    for x in b.letters:
        c = abs(x) - 1  # only column c changes under right multiplication
        for row in M:
            left = row[c - 1] if c >= 1 else ZERO
            right = row[c + 1] if c + 1 < d else ZERO
            if x > 0:
                row[c] = _T * left + _MT * row[c] + right
            else:
                row[c] = left + _MTINV * row[c] + _TINV * right
    return M


def burau_at_minus_one(b: BraidWord) -> IntMatrix:
    """Reduced Burau matrix at t = -1, computed directly over the integers."""
    _check(b)
    d = b.strands - 1
    M = identity(d)
    for x in b.letters:
        c = abs(x) - 1
        for row in M:
            left = row[c - 1] if c >= 1 else 0
            right = row[c + 1] if c + 1 < d else 0
            if x > 0:
                row[c] = -left + row[c] + right
            else:
                row[c] = left + row[c] - right
    return M


def skew_form(d: int) -> IntMatrix:
    """J with J[i][i+1] = 1, J[i+1][i] = -1: the intersection pairing of the
    arc lifts e_1..e_d on the double cover of the punctured disk."""
    return [[1 if j == i + 1 else (-1 if j == i - 1 else 0) for j in range(d)]
            for i in range(d)]


def alexander_of_closure(b: BraidWord) -> LaurentPoly:
    """Alexander polynomial of the closure, normalized up to +-t^k.

    det(B - I) = +-t^k (1 + t + ... + t^(m-1)) Delta(t); a zero determinant
    gives Delta = 0.
    """
    _check(b)
    B = reduced_burau(b)
    d = len(B)
    for i in range(d):
        B[i][i] = B[i][i] - ONE
    D = det_laurent(B)
    if D.is_zero():
        return ZERO
    return exact_divide(D, geometric_sum(b.strands)).normalized()


def knot_determinant(b: BraidWord) -> int:
    """|Delta(-1)| of the closure; the closure must be a knot."""
    if cycle_count(permutation(b)) != 1:
        raise ValueError("closure has more than one component")
    if b.strands == 1:
        return 1
    return abs(alexander_of_closure(b)(-1))
