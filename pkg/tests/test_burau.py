import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from braidsurf.braid import BraidWord, compose, cycle_count, permutation
from braidsurf.burau import (
    alexander_of_closure,
    burau_at_minus_one,
    knot_determinant,
    reduced_burau,
    skew_form,
)
from braidsurf.factorization import beta_family, product
from braidsurf.intlinalg import matmul, transpose
from braidsurf.laurent import (
    ONE,
    ZERO,
    InexactDivisionError,
    LaurentPoly,
    T,
    det_laurent,
    exact_divide,
    geometric_sum,
)

from conftest import braid_words


def P(*coeffs, low=0):
    return LaurentPoly(low, coeffs)


def seifert_alexander(V):
    """Oracle: det(V - t V^T) for a 2x2 Seifert matrix, as {exponent: coeff}."""
    (a, b), (c, d) = V
    # entries p + q t with (p, q) pairs
    m = [[(a, -a), (b, -c)], [(c, -b), (d, -d)]]

    def mul(x, y):
        return {0: x[0] * y[0], 1: x[0] * y[1] + x[1] * y[0], 2: x[1] * y[1]}

    left, right = mul(m[0][0], m[1][1]), mul(m[0][1], m[1][0])
    return {k: left[k] - right[k] for k in left}


def test_trefoil_matches_seifert_oracle():
    oracle = seifert_alexander([[-1, 1], [0, -1]])
    expected = LaurentPoly.from_dict(oracle).normalized()
    assert expected == P(1, -1, 1)
    assert alexander_of_closure(BraidWord(2, (1, 1, 1))) == expected
    assert knot_determinant(BraidWord(2, (1, 1, 1))) == abs(expected(-1)) == 3


def test_unknot():
    assert alexander_of_closure(BraidWord(2, (1,))) == ONE
    assert knot_determinant(BraidWord(2, (1,))) == 1
    assert knot_determinant(BraidWord(1)) == 1
    assert knot_determinant(BraidWord(3, (1, 2))) == 1


def test_figure_eight():
    # sigma1 sigma2^-1 sigma1 sigma2^-1: Delta = t^2 - 3t + 1, det 5
    b = BraidWord(3, (1, -2, 1, -2))
    assert alexander_of_closure(b) == P(1, -3, 1)
    assert knot_determinant(b) == 5


def test_split_link_gives_zero():
    assert alexander_of_closure(BraidWord(2)) == ZERO
    with pytest.raises(ValueError):
        knot_determinant(BraidWord(2, (1, 1)))


def test_burau_generators():
    assert reduced_burau(BraidWord(2)) == [[ONE]]
    assert reduced_burau(BraidWord(2, (1,))) == [[P(-1, low=1)]]
    assert reduced_burau(BraidWord(2, (1, 1, 1))) == [[P(-1, low=3)]]
    assert burau_at_minus_one(BraidWord(2, (1,))) == [[1]]
    assert burau_at_minus_one(BraidWord(3, (1,))) == [[1, 0], [1, 1]]
    assert burau_at_minus_one(BraidWord(4)) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    with pytest.raises(ValueError):
        reduced_burau(BraidWord(1))


def _lmul(A, B):
    n = len(A)
    return [[sum((A[i][k] * B[k][j] for k in range(n)), ZERO) for j in range(n)]
            for i in range(n)]


def _evaluate(M, x):
    return [[p(x) for p in row] for row in M]


@given(braid_words(max_strands=5, max_len=10), braid_words(max_strands=5, max_len=10))
def test_burau_is_a_homomorphism(a, b):
    if a.strands != b.strands:
        b = BraidWord(a.strands, tuple(x for x in b.letters if abs(x) < a.strands))
    assert reduced_burau(compose(a, b)) == _lmul(reduced_burau(a), reduced_burau(b))


@given(braid_words(max_strands=6, max_len=12))
def test_burau_at_minus_one_is_the_evaluation(a):
    assert burau_at_minus_one(a) == _evaluate(reduced_burau(a), -1)


@given(braid_words(max_strands=6, max_len=12))
def test_burau_is_invertible_over_laurent_ring(a):
    d = det_laurent(reduced_burau(a))
    assert len(d.coeffs) == 1 and abs(d.coeffs[0]) == 1


@settings(max_examples=100)
@given(braid_words(max_strands=8, max_len=30))
def test_burau_at_minus_one_preserves_skew_form(a):
    # matrices act on row vectors, v -> v B, so invariance reads B J B^T = J
    B = burau_at_minus_one(a)
    J = skew_form(a.strands - 1)
    assert matmul(matmul(B, J), transpose(B)) == J


def test_skew_form_invariance_per_generator():
    for m in range(2, 9):
        J = skew_form(m - 1)
        for i in range(1, m):
            for s in (i, -i):
                B = burau_at_minus_one(BraidWord(m, (s,)))
                assert matmul(matmul(B, J), transpose(B)) == J


@given(braid_words(min_strands=2, max_strands=4, max_len=8), st.booleans())
def test_markov_stabilization(b, positive):
    m = b.strands
    s = BraidWord(m + 1, b.letters + ((m,) if positive else (-m,)))
    assert alexander_of_closure(s) == alexander_of_closure(b)


@given(braid_words(min_strands=2, max_strands=5, max_len=10))
def test_knot_alexander_at_one(b):
    if cycle_count(permutation(b)) == 1:
        assert abs(alexander_of_closure(b)(1)) == 1


def test_family_knot_determinant():
    for n in range(17):
        d = knot_determinant(product(beta_family(n, 1)))
        assert d == 16 * n + 31


# Laurent arithmetic

def test_laurent_printing_and_normalization():
    assert str(P(1, -1, 1)) == "t^2 - t + 1"
    assert str(ZERO) == "0"
    assert str(P(-2, low=-1)) == "-2t^-1"
    assert P(0, 0, 3, 0).low == 2 and P(0, 0, 3, 0).coeffs == (3,)
    assert P(1, -1, low=-3).normalized() == P(-1, 1)
    assert P(1, 2).to_json() == {"low": 0, "coeffs": [1, 2]}


def test_exact_division():
    assert exact_divide(P(1, 0, -1), P(1, 1)) == P(1, -1)
    assert exact_divide(P(1, -1, low=2), P(1, low=1)) == P(1, -1, low=1)
    with pytest.raises(InexactDivisionError):
        exact_divide(P(1, 0, 1), P(1, 1))
    with pytest.raises(ZeroDivisionError):
        exact_divide(ONE, ZERO)


def test_evaluation_is_exact():
    assert geometric_sum(4)(-1) == 0
    assert (T ** -1)(2) == __import__("fractions").Fraction(1, 2)
    assert P(1, 1)(3) == 4


@given(st.lists(st.integers(-5, 5), max_size=5), st.lists(st.integers(-5, 5), min_size=1, max_size=4),
       st.integers(-3, 3))
def test_division_inverts_multiplication(a, b, shift):
    p, q = LaurentPoly(shift, tuple(a)), LaurentPoly(0, tuple(b))
    if q.is_zero():
        return
    assert exact_divide(p * q, q) == p


def test_det_laurent_matches_expansion():
    M = [[T, ONE], [ONE, T]]
    assert det_laurent(M) == T * T - ONE
    M = [[ZERO, ONE, ZERO], [ONE, ZERO, ZERO], [ZERO, ZERO, T]]
    assert det_laurent(M) == -T
