"""Words in a free group on generators x_1..x_m.

A letter is a nonzero int: ``k`` is x_k and ``-k`` is its inverse. Words are
plain tuples internally; :class:`FreeWord` pairs one with its rank for the
public API and always stores it freely reduced.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .kernel import reduce_word, substitute

__all__ = [
    "FreeWord",
    "reduce_word",
    "substitute",
    "inverse",
    "cyclic_reduce",
    "cyclic_canonical",
    "format_word",
    "parse_word",
    "exponent_vector",
]

_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_SUB_BACK = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")


@dataclass(frozen=True)
class FreeWord:
    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("free group rank must be positive")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.rank:
                raise ValueError(f"letter {x} out of range for rank {self.rank}")
        object.__setattr__(self, "letters", reduce_word(letters))

    def __mul__(self, other: FreeWord) -> FreeWord:
        if other.rank != self.rank:
            raise ValueError("rank mismatch")
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(self.rank, inverse(self.letters))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return format_word(self.letters)


def inverse(word):
    return tuple(-x for x in reversed(word))


def cyclic_reduce(word):
    w = reduce_word(word)
    i, j = 0, len(w)
    while j - i > 1 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def cyclic_canonical(word):
    """Least rotation of the cyclic reduction of ``word`` or of its inverse.

    Two relators have the same canonical form exactly when one is a cyclic
    permutation of the other or of its inverse.
    """
    w = cyclic_reduce(word)
    if not w:
        return ()
    best = None
    for cand in (w, inverse(w)):
        for k in range(len(cand)):
            rot = cand[k:] + cand[:k]
            if best is None or _order_key(rot) < _order_key(best):
                best = rot
    return best


def _order_key(word):
    # generator index first, positive letter before its inverse
    return tuple((abs(x), x < 0) for x in word)


def exponent_vector(word, rank):
    v = [0] * rank
    for x in word:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return v


def format_word(word, style="unicode", labels=None):
    """Render a word in gamma notation, e.g. ``γ₁γ₂γ₁⁻¹``.

    ``style="ascii"`` gives ``g1 g2 g1^-1``; the identity prints as ``1``.
    """
    if not word:
        return "1"
    parts = []
    for x in word:
        k = abs(x) if labels is None else labels[abs(x) - 1]
        if style == "ascii":
            parts.append(f"g{k}" + ("^-1" if x < 0 else ""))
        else:
            parts.append("γ" + str(k).translate(_SUB) + ("⁻¹" if x < 0 else ""))
    return (" " if style == "ascii" else "").join(parts)


_TOKEN = re.compile(r"\s*(?:γ|g|x)\s*([0-9₀-₉]+)\s*(\^\s*-\s*1|⁻¹|\^\s*\(\s*-\s*1\s*\))?")


def parse_word(text):
    """Parse gamma notation (unicode or ascii) into a letter tuple.

    Accepts ``γ₁γ₂⁻¹``, ``g1 g2^-1`` and ``x1x2^-1``; ``1`` is the identity.
    """
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse word at {text[pos:]!r}")
        k = int(m.group(1).translate(_SUB_BACK))
        if k == 0:
            raise ValueError("generator indices start at 1")
        out.append(-k if m.group(2) else k)
        pos = m.end()
    return tuple(out)
