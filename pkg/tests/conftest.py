import hypothesis.strategies as st
from hypothesis import settings

from braidsurf.braid import BraidWord

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def braid_words(draw, min_strands=2, max_strands=6, max_len=20, strands=None):
    m = strands if strands is not None else draw(st.integers(min_strands, max_strands))
    letter = st.integers(1, m - 1).flatmap(lambda i: st.sampled_from((i, -i)))
    return BraidWord(m, tuple(draw(st.lists(letter, max_size=max_len))))


@st.composite
def free_words(draw, rank=4, max_len=30):
    letter = st.integers(1, rank).flatmap(lambda i: st.sampled_from((i, -i)))
    return tuple(draw(st.lists(letter, max_size=max_len)))


@st.composite
def int_matrices(draw, max_rows=5, max_cols=5, bound=9):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    entry = st.integers(-bound, bound)
    return [draw(st.lists(entry, min_size=c, max_size=c)) for _ in range(r)], c


@st.composite
def unimodular(draw, n=2, steps=8):
    """Product of random elementary matrices and sign flips."""
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(draw(st.integers(0, steps))):
        i = draw(st.integers(0, n - 1))
        j = draw(st.integers(0, n - 1))
        q = draw(st.integers(-3, 3))
        if i == j:
            if q < 0:
                for row in U:
                    row[i] = -row[i]
            continue
        for row in U:
            row[j] += q * row[i]
    return U
