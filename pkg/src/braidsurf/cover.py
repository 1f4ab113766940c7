"""Homology of the double branched cover of the 4-disk along a braided
surface.

The cover is a Lefschetz fibration over the disk whose fiber F is the double
cover of the disk branched at the m punctures, and whose vanishing cycles are
the lifts of the factors' arcs. H_1(F) = Z^(m-1) with basis e_1..e_(m-1), the
lifts of the straight arcs between neighbouring punctures, and intersection
pairing J (see :func:`braidsurf.burau.skew_form`). The cover is built from
F x D^2 by one 2-handle per factor, so

    H_2(X) = ker(Z^k -> H_1(F)),   H_1(X) = coker(Z^k -> H_1(F)).
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import invert
from .burau import burau_at_minus_one, skew_form
from .factorization import Factorization
from .fixtures import Fixtures, default_fixtures
from .intlinalg import IntMatrix, cokernel_invariants, det, integer_kernel, transpose
from .qform import (
    IntersectionForm,
    UnsupportedForm,
    definiteness,
    equivalent,
    is_even,
    represents,
)

__all__ = [
    "FiberData",
    "CoverHomology",
    "Certificate",
    "fiber_data",
    "cycle_classes",
    "cover_form",
    "gram_from_classes",
    "forms_equivalent_certificate",
]


@dataclass(frozen=True)
class FiberData:
    strands: int
    h1_rank: int
    genus: int
    boundary_components: int
    skew_form: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "h1_rank": self.h1_rank,
            "genus": self.genus,
            "boundary_components": self.boundary_components,
        }


def fiber_data(m: int) -> FiberData:
    if m < 2:
        raise ValueError("the fiber needs at least 2 branch points")
    b = 1 if m % 2 else 2
    # chi(F) = 2 - m = 2 - 2g - b
    return FiberData(m, m - 1, (m - b) // 2, b, tuple(map(tuple, skew_form(m - 1))))


def cycle_classes(f: Factorization) -> list[list[int]]:
    """Homology class in H_1(F) of each factor's vanishing cycle.

    For the factor (w, i) the arc is the image of the straight arc i under
    w^-1 acting on the left, so its lift is e_i pushed through the t = -1
    Burau matrix of w^-1 (row-vector action).
    """
    d = f.strands - 1
    if d == 0:
        return [[] for _ in f.factors]
    out = []
    for h in f.factors:
        B = burau_at_minus_one(invert(h.conjugator))
        out.append(list(B[h.index - 1]))
    return out


def _pairing(u, v, J) -> int:
    return sum(u[a] * J[a][b] * v[b] for a in range(len(u)) for b in range(len(v)) if J[a][b])


def gram_from_classes(classes, kernel_vectors, epsilon: int = -1,
                      reverse_order: bool = False) -> list[list[int]]:
    """Q(x, y) = -sum_j x_j y_j + epsilon * sum_{i before j} x_i y_j <c_i, c_j>.

    "i before j" is listed order, or the opposite when ``reverse_order``.
    """
    k = len(classes)
    d = len(classes[0]) if classes else 0
    J = skew_form(d)
    P = [[_pairing(classes[i], classes[j], J) for j in range(k)] for i in range(k)]
    if reverse_order:
        P = [[P[j][i] for j in range(k)] for i in range(k)]

    def q(x, y):
        s = -sum(x[j] * y[j] for j in range(k))
        s += epsilon * sum(x[i] * y[j] * P[i][j]
                           for i in range(k) if x[i] for j in range(i + 1, k) if y[j])
        return s

    return [[q(x, y) for y in kernel_vectors] for x in kernel_vectors]


@dataclass(frozen=True)
class CoverHomology:
    strands: int
    boundary_map: tuple[tuple[int, ...], ...]  # (m-1) x k, column j = class of factor j
    h2_basis: tuple[tuple[int, ...], ...]  # kernel vectors in Z^k
    gram: IntersectionForm
    h1_invariant_factors: tuple[int, ...]  # nontrivial invariant factors, 0 = free Z
    boundary_h1_order: int | str  # |det gram| when H_1(X) = 0, else "unsupported"

    @property
    def k(self) -> int:
        return len(self.boundary_map[0]) if self.boundary_map else len(self.h2_basis[0]) if self.h2_basis else 0

    @property
    def h2_rank(self) -> int:
        return len(self.h2_basis)

    @property
    def det(self) -> int:
        return det(self.gram.matrix())

    def represents_minus_two(self) -> bool | None:
        """Whether some class has square -2; None when the form is not
        definite (no exhaustive search is possible)."""
        try:
            return represents(self.gram, -2) is not None
        except UnsupportedForm:
            return None

    def to_json(self, k: int | None = None) -> dict:
        m = self.strands
        return {
            "m": m,
            "k": self.k if k is None else k,
            "fiber": fiber_data(m).to_json() if m >= 2 else None,
            "boundary_map": [list(r) for r in self.boundary_map],
            "h2_rank": self.h2_rank,
            "gram": self.gram.matrix(),
            "h1": list(self.h1_invariant_factors),
            "det": self.det,
            "represents_minus_two": self.represents_minus_two(),
        }


def cover_form(f: Factorization, fixtures: Fixtures | None = None) -> CoverHomology:
    fx = fixtures or default_fixtures()
    classes = cycle_classes(f)
    d, k = f.strands - 1, len(f.factors)
    A = transpose(classes, d) if k else [[] for _ in range(d)]
    K = integer_kernel(A, k)
    vectors = [[K[r][c] for r in range(k)] for c in range(len(K[0]) if K else 0)]
    G = gram_from_classes(classes, vectors, fx.epsilon, fx.reverse_order)
    form = IntersectionForm(G)  # raises if the pairing came out asymmetric
    h1 = cokernel_invariants(A, d)
    order = abs(det(G)) if not h1 else "unsupported"
    return CoverHomology(
        strands=f.strands,
        boundary_map=tuple(map(tuple, A)),
        h2_basis=tuple(map(tuple, vectors)),
        gram=form,
        h1_invariant_factors=tuple(h1),
        boundary_h1_order=order,
    )


@dataclass(frozen=True)
class Certificate:
    verdict: str  # "equivalent", "inequivalent" or "undecided"
    witness: str | None = None


def _kind(G):
    return definiteness(G) if G else "positive_definite"


def forms_equivalent_certificate(f1: Factorization, f2: Factorization,
                                 fixtures: Fixtures | None = None) -> Certificate:
    """Compare the intersection forms of the two covers.

    An inequivalence verdict always names the invariant that differs: rank,
    determinant, definiteness, parity, or a value represented by one form
    only.
    """
    G1 = cover_form(f1, fixtures).gram.matrix()
    G2 = cover_form(f2, fixtures).gram.matrix()
    return compare_forms(G1, G2)


def compare_forms(G1: IntMatrix, G2: IntMatrix) -> Certificate:
    if len(G1) != len(G2):
        return Certificate("inequivalent", f"rank {len(G1)} vs {len(G2)}")
    if G1 == G2:
        return Certificate("equivalent")
    d1, d2 = det(G1), det(G2)
    if d1 != d2:
        return Certificate("inequivalent", f"det {d1} vs {d2}")
    k1, k2 = _kind(G1), _kind(G2)
    if k1 != k2:
        return Certificate("inequivalent", f"{k1} vs {k2}")
    if is_even(G1) != is_even(G2):
        return Certificate("inequivalent", "parity")
    if k1 not in ("positive_definite", "negative_definite"):
        return Certificate("undecided")
    sign = -1 if k1 == "negative_definite" else 1
    top = max(abs(G1[i][i]) for i in range(len(G1)))
    for t in range(1, top + 1):
        r1 = represents(G1, sign * t) is not None
        r2 = represents(G2, sign * t) is not None
        if r1 != r2:
            return Certificate("inequivalent", f"represents {sign * t}")
    try:
        same = equivalent(G1, G2)
    except UnsupportedForm:
        return Certificate("undecided")
    return Certificate("equivalent") if same else Certificate("inequivalent", "reduced forms differ")
