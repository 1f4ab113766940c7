"""Integral symmetric bilinear forms of low rank: definiteness, Gauss
reduction of binary forms, equivalence over GL(Z), and exhaustive search for
vectors of a given square.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .intlinalg import IntMatrix, det, matmul, transpose

__all__ = [
    "IntersectionForm",
    "UnsupportedForm",
    "definiteness",
    "represents",
    "gauss_reduce_binary",
    "equivalent",
    "is_even",
    "minimum",
    "value",
]


class UnsupportedForm(ValueError):
    """The operation is only implemented for definite forms of rank <= 2."""


@dataclass(frozen=True)
class IntersectionForm:
    gram: tuple[tuple[int, ...], ...]
    basis_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        n = len(g)
        if any(len(row) != n for row in g):
            raise ValueError("Gram matrix must be square")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(i)):
            raise ValueError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", g)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def matrix(self) -> IntMatrix:
        return [list(row) for row in self.gram]


def _gram(Q) -> list[list[int]]:
    if isinstance(Q, IntersectionForm):
        return Q.matrix()
    return [list(row) for row in Q]


def value(Q, x) -> int:
    G = _gram(Q)
    return sum(G[i][j] * x[i] * x[j] for i in range(len(x)) for j in range(len(x)))


def definiteness(Q) -> str:
    """One of negative_definite, positive_definite, indefinite, degenerate.

    Decided by the signs of the leading principal minors. The rank-0 form
    counts as positive definite.
    """
    G = _gram(Q)
    n = len(G)
    if det(G) == 0:
        return "degenerate"
    minors = [det([row[:k] for row in G[:k]]) for k in range(1, n + 1)]
    if all(d > 0 for d in minors):
        return "positive_definite"
    if all((d > 0) if k % 2 == 0 else (d < 0) for k, d in enumerate(minors, 1)):
        return "negative_definite"
    return "indefinite"


def is_even(Q) -> bool:
    return all(row[i] % 2 == 0 for i, row in enumerate(_gram(Q)))


def _ldl(G):
    """Exact G = L D L^T for positive definite G: returns (mu, d) with
    q(x) = sum_i d_i (x_i + sum_{j>i} mu[j][i] x_j)^2."""
    n = len(G)
    A = [[Fraction(x) for x in row] for row in G]
    mu = [[Fraction(0)] * n for _ in range(n)]
    d = [Fraction(0)] * n
    for i in range(n):
        d[i] = A[i][i]
        for j in range(i + 1, n):
            mu[j][i] = A[i][j] / d[i]
        for j in range(i + 1, n):
            for k in range(i + 1, n):
                A[j][k] -= mu[j][i] * A[i][k]
    return mu, d


def _int_window(center: Fraction, radius_sq: Fraction):
    """All integers x with (x - center)^2 <= radius_sq, ascending."""
    if radius_sq < 0:
        return range(0)
    r = math.isqrt(radius_sq.numerator // radius_sq.denominator) + 1
    lo = math.floor(center) - r
    hi = math.ceil(center) + r
    xs = [x for x in range(lo, hi + 1) if (x - center) ** 2 <= radius_sq]
    return xs


def _enumerate_shell(G, target):
    """Fincke-Pohst: yield every integer x with x^T G x == target for
    positive definite G, in a fixed order (last coordinate outermost)."""
    n = len(G)
    mu, d = _ldl(G)
    target = Fraction(target)
    x = [0] * n

    def rec(i, remaining):
        center = -sum(mu[j][i] * x[j] for j in range(i + 1, n))
        for xi in _int_window(center, remaining / d[i]):
            x[i] = xi
            used = d[i] * (xi - center) ** 2
            if i == 0:
                if remaining - used == 0:
                    yield tuple(x)
            else:
                yield from rec(i - 1, remaining - used)
        x[i] = 0

    if n == 0:
        return
    yield from rec(n - 1, target)


def represents(Q, target: int, bound: int | None = None):
    """A nonzero integer vector x with x^T Q x = target, or None.

    For definite Q the search covers the whole ellipsoid, so None proves
    that no such vector exists. Indefinite or degenerate forms need
    ``bound``; then only the box |x_i| <= bound is searched.
    """
    G = _gram(Q)
    n = len(G)
    kind = definiteness(G) if n else "positive_definite"
    if kind in ("positive_definite", "negative_definite"):
        sign = 1 if kind == "positive_definite" else -1
        t = sign * target
        if t <= 0 or n == 0:
            return None
        P = [[sign * v for v in row] for row in G]
        for x in _enumerate_shell(P, t):
            if any(x):
                return x
        return None
    if bound is None:
        raise UnsupportedForm(f"{kind} form: exhaustive search needs a bound")
    for x in itertools.product(range(-bound, bound + 1), repeat=n):
        if any(x) and value(G, x) == target:
            return x
    return None


def minimum(Q) -> int:
    """Least |x^T Q x| over nonzero integer x, for a definite form."""
    G = _gram(Q)
    kind = definiteness(G)
    if kind not in ("positive_definite", "negative_definite"):
        raise UnsupportedForm("minimum is only defined here for definite forms")
    sign = 1 if kind == "positive_definite" else -1
    P = [[sign * v for v in row] for row in G]
    # diagonal entries are represented values, so the search is finite
    for t in range(1, min(P[i][i] for i in range(len(P))) + 1):
        if next(_enumerate_shell(P, t), None) is not None:
            return t
    raise AssertionError("unreachable: a diagonal entry is represented")


def gauss_reduce_binary(Q) -> tuple[list[list[int]], list[list[int]]]:
    """Reduced representative of a definite binary form under GL_2(Z).

    Returns ``(R, U)`` with ``U^T Q U = R`` and U unimodular. For a positive
    definite form [[a, b], [b, c]] the result satisfies 0 <= 2b <= a <= c,
    which picks a unique member of the class; negative definite forms are
    reduced through their negatives.
    """
    G = _gram(Q)
    if len(G) != 2:
        raise UnsupportedForm("binary reduction needs a rank-2 form")
    kind = definiteness(G)
    if kind not in ("positive_definite", "negative_definite"):
        raise UnsupportedForm(f"cannot reduce a {kind} form")
    sign = 1 if kind == "positive_definite" else -1
    a, b, c = sign * G[0][0], sign * G[0][1], sign * G[1][1]
    U = [[1, 0], [0, 1]]

    def apply(M):
        nonlocal a, b, c, U
        # (a, b, c) <- M^T [[a, b], [b, c]] M
        (p, q), (r, s) = M
        a, b, c = (a * p * p + 2 * b * p * r + c * r * r,
                   a * p * q + b * (p * s + q * r) + c * r * s,
                   a * q * q + 2 * b * q * s + c * s * s)
        U = matmul(U, M)

    while True:
        if 2 * abs(b) > a:
            k = _round_half_down(Fraction(b, a))
            apply([[1, -k], [0, 1]])
        elif a > c:
            apply([[0, 1], [1, 0]])
        else:
            break
    if b < 0:
        apply([[1, 0], [0, -1]])
    R = [[sign * a, sign * b], [sign * b, sign * c]]
    return R, U


def _round_half_down(q: Fraction) -> int:
    f = math.floor(q)
    return f if q - f <= Fraction(1, 2) else f + 1


def equivalent(Q1, Q2) -> bool:
    """GL(Z)-equivalence of definite forms of rank <= 2."""
    G1, G2 = _gram(Q1), _gram(Q2)
    if len(G1) != len(G2):
        return False
    n = len(G1)
    if n > 2:
        raise UnsupportedForm("equivalence is implemented for rank <= 2 only")
    if n == 0:
        return True
    if det(G1) != det(G2):
        return False
    k1, k2 = definiteness(G1), definiteness(G2)
    for k in (k1, k2):
        if k not in ("positive_definite", "negative_definite"):
            raise UnsupportedForm(f"cannot decide equivalence of a {k} form")
    if k1 != k2:
        return False
    if n == 1:
        return G1 == G2
    return gauss_reduce_binary(G1)[0] == gauss_reduce_binary(G2)[0]


def transform(Q, U):
    """U^T Q U."""
    return matmul(matmul(transpose(U), _gram(Q)), U)
