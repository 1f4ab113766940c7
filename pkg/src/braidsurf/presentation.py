"""Zariski-van Kampen presentations of braided-surface complements, Tietze
simplification and abelianization.

Generators are labelled by their original puncture numbers so simplified
presentations still read in terms of the meridians gamma_1..gamma_m.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .braid import BraidWord, artin_key
from .factorization import Factorization, HalfTwist, as_braid
from .freegroup import (
    cyclic_canonical,
    cyclic_reduce,
    format_word,
    inverse,
    parse_word,
    reduce_word,
)
from .intlinalg import cokernel_invariants, transpose

__all__ = [
    "GroupPresentation",
    "TietzeResult",
    "ArcNotFound",
    "vk_relations",
    "vk_presentation",
    "tietze_simplify",
    "abelianization",
    "find_arc_word",
    "relation_relator",
    "parse_relation",
    "format_relation",
]


@dataclass(frozen=True)
class GroupPresentation:
    """<generators | relators>, relators freely reduced and nontrivial."""

    generators: tuple[int, ...]
    relators: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        rels = []
        for r in self.relators:
            r = reduce_word(tuple(r))
            for x in r:
                if abs(x) not in gens:
                    raise ValueError(f"relator uses unknown generator {abs(x)}")
            if r:
                rels.append(r)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))

    @classmethod
    def free(cls, rank: int, relators=()) -> GroupPresentation:
        return cls(tuple(range(1, rank + 1)), tuple(relators))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def is_infinite_cyclic(self) -> bool:
        return self.rank == 1 and not self.relators

    def format(self, style: str = "unicode") -> str:
        gens = ", ".join(format_word((g,), style) for g in self.generators)
        rels = ", ".join(format_word(r, style) for r in self.relators)
        if style == "ascii":
            return f"< {gens} | {rels or '-'} >"
        return f"⟨{gens} | {rels or '−'}⟩"

    def __str__(self):
        return self.format()


@dataclass(frozen=True)
class TietzeResult:
    presentation: GroupPresentation
    complete: bool  # False when the step budget ran out before a fixpoint
    steps: int


class ArcNotFound(LookupError):
    pass


def vk_relations(f: Factorization, at=None) -> list[tuple[int, tuple[int, ...]]]:
    """One relation A_j = B_j per factor.

    A_j is the meridian around an endpoint p of the factor's arc, the smaller
    one unless ``at[j]`` names the other, and B_j its image under the
    factor's half-twist with any outer conjugation by gamma_p removed
    (conjugating both sides by gamma_p fixes A_j). Both endpoints give the
    same relator up to cyclic permutation and inversion.
    """
    if at is not None and len(at) != len(f.factors):
        raise ValueError("need one endpoint per factor")
    out = []
    for j, h in enumerate(f.factors):
        ends = h.endpoints()
        p = ends[0] if at is None or at[j] is None else at[j]
        if p not in ends:
            raise ValueError(f"puncture {p} is not an endpoint of factor {j + 1}")
        b = artin_key(as_braid(h)).images[p - 1]
        while len(b) > 2 and abs(b[0]) == p and b[-1] == -b[0]:
            b = b[1:-1]
        out.append((p, b))
    return out


def relation_relator(lhs, rhs) -> tuple[int, ...]:
    return reduce_word(tuple(lhs) + inverse(tuple(rhs)))


def vk_presentation(f: Factorization, mode: str = "single") -> GroupPresentation:
    if mode == "single":
        rels = [relation_relator((p,), b) for p, b in vk_relations(f)]
    elif mode == "full":
        rels = []
        for h in f.factors:
            images = artin_key(as_braid(h)).images
            rels += [relation_relator((t,), img) for t, img in enumerate(images, 1)]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return GroupPresentation.free(f.strands, rels)


def _sort_key(r):
    return (len(r), tuple((abs(x), x < 0) for x in r))


def _normalize(relators):
    seen = set()
    out = []
    for r in relators:
        r = cyclic_reduce(r)
        if not r:
            continue
        c = cyclic_canonical(r)
        if c in seen:
            continue
        seen.add(c)
        out.append(r)
    return sorted(out, key=_sort_key)


def _eliminable(r):
    """Highest-labelled generator occurring exactly once in r, with the
    solved value g = w; None if there is none."""
    counts = {}
    for x in r:
        counts[abs(x)] = counts.get(abs(x), 0) + 1
    for g in sorted(counts, reverse=True):
        if counts[g] == 1:
            k = next(i for i, x in enumerate(r) if abs(x) == g)
            rot = r[k:] + r[:k]  # g^e u with g not in u
            rest = rot[1:]
            return g, (inverse(rest) if rot[0] > 0 else rest)
    return None


def _subst_generator(r, g, value):
    out = []
    inv_value = inverse(value)
    for x in r:
        if x == g:
            out.extend(value)
        elif x == -g:
            out.extend(inv_value)
        else:
            out.append(x)
    return reduce_word(tuple(out))


def tietze_simplify(P: GroupPresentation, budget: int = 10_000) -> TietzeResult:
    """Eliminate generators through relators of the form g w^-1 (up to
    rotation) with g absent from w, shortest relator first, until nothing
    more can be eliminated or ``budget`` eliminations were made.

    The result presents the same group; failing to reach a recognisable form
    says nothing about the group.
    """
    gens = list(P.generators)
    rels = _normalize(P.relators)
    steps = 0
    while True:
        choice = None
        for idx, r in enumerate(rels):
            e = _eliminable(r)
            if e is not None:
                choice = (idx, *e)
                break
        if choice is None:
            return TietzeResult(GroupPresentation(tuple(gens), tuple(rels)), True, steps)
        if steps >= budget:
            return TietzeResult(GroupPresentation(tuple(gens), tuple(rels)), False, steps)
        idx, g, value = choice
        rest = rels[:idx] + rels[idx + 1:]
        rels = _normalize(_subst_generator(r, g, value) for r in rest)
        gens.remove(g)
        steps += 1


def abelianization(P: GroupPresentation) -> list[int]:
    """Invariant factors of the abelianization; 0 marks a free Z summand.

    ``[0]`` is Z, ``[2]`` is Z/2, ``[]`` the trivial group.
    """
    col = {g: k for k, g in enumerate(P.generators)}
    rows = []
    for r in P.relators:
        v = [0] * P.rank
        for x in r:
            v[col[abs(x)]] += 1 if x > 0 else -1
        rows.append(v)
    # relator vectors as columns of a rank x #relators matrix
    A = transpose(rows, P.rank)
    return cokernel_invariants(A, P.rank)


def _word_order(m, length):
    letters = [s for i in range(1, m) for s in (i, -i)]
    for w in itertools.product(letters, repeat=length):
        if all(w[k] != -w[k + 1] for k in range(length - 1)):
            yield w


def find_arc_word(target, index_hint: int, max_len: int, strands: int | None = None) -> HalfTwist:
    """First half-twist (w, index_hint), w freely reduced with |w| <= max_len,
    whose single van Kampen relator equals ``target`` up to cyclic
    permutation and inversion.

    Words are tried by length, then lexicographically with generators in
    increasing index and sigma_i before sigma_i^-1. ``target`` is a letter
    tuple or a relation string such as ``"γ1 = γ2 γ3 γ2^-1"``.
    """
    if isinstance(target, str):
        target = parse_relation(target)
    goal = cyclic_canonical(tuple(target))
    if strands is None:
        strands = max((abs(x) for x in goal), default=1)
        strands = max(strands, index_hint + 1)
    for length in range(max_len + 1):
        for w in _word_order(strands, length):
            h = HalfTwist(BraidWord(strands, w), index_hint)
            p, _ = h.endpoints()
            b = artin_key(as_braid(h)).images[p - 1]
            if cyclic_canonical(relation_relator((p,), b)) == goal:
                return h
    raise ArcNotFound(f"no arc word of length <= {max_len} reproduces the target")


def parse_relation(text: str) -> tuple[int, ...]:
    """Relator of ``"lhs = rhs"`` (or a bare word) in gamma notation."""
    if "=" in text:
        lhs, rhs = text.split("=", 1)
        return relation_relator(parse_word(lhs), parse_word(rhs))
    return reduce_word(parse_word(text))


def format_relation(lhs, rhs, style: str = "unicode") -> str:
    return f"{format_word(tuple(lhs), style)} = {format_word(tuple(rhs), style)}"

