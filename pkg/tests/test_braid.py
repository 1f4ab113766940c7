import itertools

import hypothesis.strategies as st
import pytest
from hypothesis import given

from braidsurf.braid import (
    ArtinKey,
    BraidWord,
    artin_key,
    braids_equal,
    compose,
    cycle_count,
    exponent_sum,
    invert,
    parse_braid,
    permutation,
)
from braidsurf.factorization import beta_family, product
from braidsurf.freegroup import (
    FreeWord,
    cyclic_canonical,
    cyclic_reduce,
    format_word,
    inverse,
    parse_word,
)

from conftest import braid_words, free_words


def B(m, *letters):
    return BraidWord(m, letters)


def test_compose_examples():
    assert compose(B(2, 1), B(2, 1)) == B(2, 1, 1)
    assert compose(B(2, 1), BraidWord.identity(2)) == B(2, 1)
    w = compose(B(3, 1, 2), B(3, -2, -1))
    assert w.letters == (1, 2, -2, -1)
    assert artin_key(w) == artin_key(BraidWord.identity(3))


def test_compose_strand_mismatch():
    with pytest.raises(ValueError):
        compose(B(2, 1), B(3, 1))


def test_invert_examples():
    assert invert(B(2, 1)) == B(2, -1)
    assert invert(BraidWord.identity(4)) == BraidWord.identity(4)
    assert invert(B(3, 1, -2)) == B(3, 2, -1)


def test_braidword_validation():
    for bad in ((0,), (3,), (-3,)):
        with pytest.raises(ValueError):
            BraidWord(3, bad)
    with pytest.raises(ValueError):
        BraidWord(0)


def test_artin_key_examples():
    assert artin_key(BraidWord.identity(3)).images == ((1,), (2,), (3,))
    assert artin_key(B(2, 1)).images == ((1, 2, -1), (1,))
    # hand composition: x1 -> x1 x2 x1^-1 -> (x1x2x1^-1) x1 (x1x2x1^-1)^-1
    assert artin_key(B(2, 1, 1)).images == ((1, 2, 1, -2, -1), (1, 2, -1))


def test_braids_equal_examples():
    assert braids_equal(B(3, 1, 2, 1), B(3, 2, 1, 2))
    assert not braids_equal(B(3, 1), B(3, 2))
    assert braids_equal(product(beta_family(0, 1)), product(beta_family(0, 2)))
    with pytest.raises(ValueError):
        braids_equal(B(3, 1), B(4, 1))


def test_permutation_examples():
    assert permutation(BraidWord.identity(3)) == (1, 2, 3)
    assert permutation(B(2, 1)) == (2, 1)
    p = permutation(product(beta_family(0, 1)))
    assert cycle_count(p) == 1 and len(p) == 3


def test_exponent_sum_examples():
    assert exponent_sum(BraidWord.identity(3)) == 0
    assert exponent_sum(B(2, -1, 1)) == 0
    for n in range(5):
        assert exponent_sum(product(beta_family(n, 1))) == n + 4


def test_parse_braid():
    assert parse_braid("1 2 -1", 3) == B(3, 1, 2, -1)
    assert parse_braid("", 2) == BraidWord.identity(2)
    with pytest.raises(ValueError):
        parse_braid("1 x", 3)
    with pytest.raises(ValueError):
        parse_braid("3", 3)
    assert str(B(3, 1, 2, -1)) == "1 2 -1"


@given(braid_words(max_strands=6, max_len=20), braid_words(max_strands=6, max_len=20))
def test_artin_key_is_a_homomorphism(a, b):
    if a.strands != b.strands:
        b = BraidWord(a.strands, tuple(x for x in b.letters if abs(x) < a.strands))
    assert artin_key(compose(a, b)) == artin_key(a).then(artin_key(b))


@given(braid_words(max_strands=6, max_len=20))
def test_artin_conditions(a):
    assert artin_key(a).satisfies_artin_conditions()


@given(braid_words(max_strands=6, max_len=20))
def test_inverse_cancels(a):
    ident = artin_key(BraidWord.identity(a.strands))
    assert artin_key(compose(a, invert(a))) == ident
    assert artin_key(compose(invert(a), a)) == ident


def test_artin_conditions_detect_garbage():
    assert not ArtinKey(((2,), (1,))).satisfies_artin_conditions()
    assert not ArtinKey(((1,), (1,))).satisfies_artin_conditions()


@pytest.mark.parametrize("m", range(2, 9))
def test_braid_relations_hold(m):
    for i, j in itertools.product(range(1, m), repeat=2):
        if abs(i - j) >= 2:
            assert braids_equal(B(m, i, j), B(m, j, i))
        if j == i + 1:
            assert braids_equal(B(m, i, j, i), B(m, j, i, j))
        if i != j:
            assert not braids_equal(B(m, i), B(m, j))


def _relators(m):
    rels = []
    for i in range(1, m):
        rels.append((i, -i))
        if i + 1 < m:
            rels.append((i, i + 1, i, -(i + 1), -i, -(i + 1)))
        for j in range(i + 2, m):
            rels.append((i, j, -i, -j))
    return rels


@given(braid_words(min_strands=3, max_strands=6, max_len=12), st.data())
def test_invariants_survive_relator_insertion(a, data):
    rels = _relators(a.strands)
    letters = list(a.letters)
    for _ in range(data.draw(st.integers(1, 3))):
        r = data.draw(st.sampled_from(rels))
        if data.draw(st.booleans()):
            r = inverse(r)
        pos = data.draw(st.integers(0, len(letters)))
        letters[pos:pos] = r
    b = BraidWord(a.strands, tuple(letters))
    assert braids_equal(a, b)
    assert exponent_sum(a) == exponent_sum(b)
    assert permutation(a) == permutation(b)


@given(braid_words(max_strands=6, max_len=20))
def test_permutation_is_a_homomorphism(a):
    p = permutation(a)
    q = permutation(invert(a))
    assert all(q[p[j] - 1] == j + 1 for j in range(a.strands))


# free words

def test_freeword_reduces_on_construction():
    w = FreeWord(3, (1, 2, -2, 3))
    assert w.letters == (1, 3)
    assert (w * w.inverse()).letters == ()
    with pytest.raises(ValueError):
        FreeWord(2, (3,))


def test_word_formatting_round_trip():
    w = (1, 2, -1, -3)
    assert format_word(w) == "γ₁γ₂γ₁⁻¹γ₃⁻¹"
    assert format_word(w, "ascii") == "g1 g2 g1^-1 g3^-1"
    assert format_word(()) == "1"
    assert parse_word("γ₁γ₂γ₁⁻¹γ₃⁻¹") == w
    assert parse_word("g1 g2 g1^-1 g3^-1") == w
    assert parse_word("x12") == (12,)
    with pytest.raises(ValueError):
        parse_word("γ1 ?")


@given(free_words(rank=9, max_len=20))
def test_parse_format_inverse(w):
    for style in ("unicode", "ascii"):
        assert parse_word(format_word(w, style)) == w


@given(free_words(rank=4, max_len=20), free_words(rank=4, max_len=6))
def test_cyclic_canonical_is_conjugation_invariant(w, u):
    conj = u + w + inverse(u)
    assert cyclic_canonical(conj) == cyclic_canonical(w)
    assert cyclic_canonical(inverse(w)) == cyclic_canonical(w)


@given(free_words(rank=4, max_len=20))
def test_cyclic_reduce_idempotent(w):
    c = cyclic_reduce(w)
    assert cyclic_reduce(c) == c
    assert not c or c[0] != -c[-1]
