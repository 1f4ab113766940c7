"""Braid words, their Artin automorphisms, and elementary invariants.

Conventions used across the package:

* ``sigma_i`` acts on the free group by x_i -> x_i x_{i+1} x_i^-1,
  x_{i+1} -> x_i, fixing the other generators.
* Words are read left to right: in ``a * b`` the braid ``a`` acts first, so
  x^(ab) = (x^a)^b. Braid products, Burau products and factorization
  products all follow this order.

Faithfulness of the Artin representation makes the tuple of images a
complete invariant, which is what :func:`braids_equal` compares.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .freegroup import cyclic_reduce, inverse, reduce_word, substitute
from .kernel import artin_images

__all__ = [
    "BraidWord",
    "ArtinKey",
    "compose",
    "invert",
    "artin_key",
    "braids_equal",
    "permutation",
    "exponent_sum",
    "cycle_count",
    "parse_braid",
]


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of B_m.

    ``letters`` holds signed generator indices: ``2`` is sigma_2 and ``-2``
    its inverse. The empty word is the identity.
    """

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(
                    f"generator {x} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, strands: int) -> BraidWord:
        return cls(strands)

    @classmethod
    def generator(cls, strands: int, i: int, sign: int = 1) -> BraidWord:
        return cls(strands, (i if sign > 0 else -i,))

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __invert__(self) -> BraidWord:
        return invert(self)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(str(x) for x in self.letters)

    def free_reduced(self) -> BraidWord:
        """Same braid with adjacent sigma_i sigma_i^-1 pairs cancelled."""
        return BraidWord(self.strands, reduce_word(self.letters))


@dataclass(frozen=True)
class ArtinKey:
    """Images of x_1..x_m under a braid's Artin automorphism."""

    images: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.images)

    def then(self, other: ArtinKey) -> ArtinKey:
        """Key of the braid that acts by ``self`` first and ``other`` second."""
        if other.rank != self.rank:
            raise ValueError("rank mismatch")
        return ArtinKey(tuple(substitute(w, other.images) for w in self.images))

    def image(self, word) -> tuple[int, ...]:
        return substitute(word, self.images)

    def satisfies_artin_conditions(self) -> bool:
        """Images are conjugates of a permutation of the generators and their
        product is x_1 ... x_m."""
        m = self.rank
        heads = []
        for w in self.images:
            c = cyclic_reduce(w)
            if len(c) != 1 or c[0] < 0:
                return False
            heads.append(c[0])
        if sorted(heads) != list(range(1, m + 1)):
            return False
        prod = reduce_word(tuple(x for w in self.images for x in w))
        return prod == tuple(range(1, m + 1))


def _check_same(a: BraidWord, b: BraidWord):
    if a.strands != b.strands:
        raise ValueError(f"strand mismatch: {a.strands} vs {b.strands}")


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    _check_same(a, b)
    return BraidWord(a.strands, a.letters + b.letters)


def invert(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands, inverse(a.letters))


@lru_cache(maxsize=65536)
def _key(letters, strands):
    return ArtinKey(artin_images(letters, strands))


def artin_key(a: BraidWord) -> ArtinKey:
    return _key(a.letters, a.strands)


def braids_equal(a: BraidWord, b: BraidWord) -> bool:
    _check_same(a, b)
    return artin_key(a) == artin_key(b)


def permutation(a: BraidWord) -> tuple[int, ...]:
    """Strand permutation: entry j-1 is where the strand starting at j ends."""
    at = list(range(1, a.strands + 1))  # at[p-1]: strand sitting at position p
    for x in a.letters:
        i = abs(x)
        at[i - 1], at[i] = at[i], at[i - 1]
    out = [0] * a.strands
    for pos, strand in enumerate(at, start=1):
        out[strand - 1] = pos
    return tuple(out)


def cycle_count(perm) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if not seen[start]:
            cycles += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j] - 1
    return cycles


def exponent_sum(a: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in a.letters)


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated signed generator indices, e.g. ``"1 2 -1"``."""
    try:
        letters = tuple(int(tok) for tok in text.split())
    except ValueError:
        raise ValueError(f"braid word must be signed integers: {text!r}") from None
    return BraidWord(strands, letters)
