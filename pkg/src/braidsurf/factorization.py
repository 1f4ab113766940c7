"""Half-twists, braid monodromy factorizations and Hurwitz moves.

A positive half-twist is stored as ``(w, i)`` meaning w sigma_i w^-1. A
factorization is an ordered tuple of half-twists on a common number of
strands; its product is the boundary braid.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .braid import (
    ArtinKey,
    BraidWord,
    artin_key,
    compose,
    cycle_count,
    exponent_sum,
    invert,
    permutation,
)
from .fixtures import Fixtures, default_fixtures

__all__ = [
    "HalfTwist",
    "Factorization",
    "ClosureInvariants",
    "SearchResult",
    "FactorizationFormatError",
    "as_braid",
    "twist_arc_action",
    "product",
    "beta_family",
    "hurwitz_move",
    "hurwitz_search",
    "closure_invariants",
    "parse_factorization",
    "format_factorization",
]


@dataclass(frozen=True)
class HalfTwist:
    conjugator: BraidWord
    index: int

    def __post_init__(self):
        if not 1 <= self.index <= self.conjugator.strands - 1:
            raise ValueError(
                f"index {self.index} out of range for {self.conjugator.strands} strands")

    @property
    def strands(self) -> int:
        return self.conjugator.strands

    def endpoints(self) -> tuple[int, int]:
        """The two punctures exchanged, smaller first."""
        moved = [j + 1 for j, p in enumerate(permutation(as_braid(self))) if p != j + 1]
        return moved[0], moved[1]

    def __str__(self):
        return f"{self.index} : {self.conjugator}"


@dataclass(frozen=True)
class Factorization:
    strands: int
    factors: tuple[HalfTwist, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        for h in self.factors:
            if h.strands != self.strands:
                raise ValueError("all factors must share the strand count")

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)


@dataclass(frozen=True)
class ClosureInvariants:
    components: int
    euler_char: int
    self_linking: int | None  # defined only for knots


@dataclass
class SearchResult:
    status: str  # "connected", "exhausted" or "budget_exceeded"
    path: list[tuple[int, int]] | None = None
    visited: int = 0
    depth_reached: int = 0

    @property
    def connected(self) -> bool:
        return self.status == "connected"


def as_braid(h: HalfTwist) -> BraidWord:
    w = h.conjugator
    return BraidWord(w.strands, w.letters + (h.index,) + invert(w).letters)


def twist_arc_action(beta: BraidWord, h: HalfTwist) -> HalfTwist:
    """Half-twist along the image of h's arc under the braid ``beta``.

    With braids acting left to right the result is beta^-1 h beta, i.e. the
    conjugator becomes beta^-1 w.
    """
    if beta.strands != h.strands:
        raise ValueError("strand mismatch")
    return HalfTwist(compose(invert(beta), h.conjugator).free_reduced(), h.index)


def product(f: Factorization) -> BraidWord:
    letters = []
    for h in f.factors:
        letters.extend(as_braid(h).letters)
    return BraidWord(f.strands, tuple(letters))


def beta_family(n: int, variant: int, fixtures: Fixtures | None = None) -> Factorization:
    """The factorization H(a) H(b) H(d_1) H(c_n) H(d_{n+2}) ... H(d_3) on n+3
    strands (variant 1), or the same with the first two arcs moved by H(d_2)
    (variant 2)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if variant not in (1, 2):
        raise ValueError("variant must be 1 or 2")
    fx = fixtures or default_fixtures()
    m = n + 3

    def twist(conj, i):
        return HalfTwist(BraidWord(m, tuple(conj)), i)

    a = twist(*fx.a)
    b = twist(*fx.b)
    if variant == 2:
        d2 = as_braid(twist((), 2))
        a = twist_arc_action(d2, a)
        b = twist_arc_action(d2, b)
    factors = [a, b, twist((), 1), twist(fx.c_conjugator(n), fx.c_index)]
    factors += [twist((), j) for j in range(n + 2, 2, -1)]
    return Factorization(m, tuple(factors))


def hurwitz_move(f: Factorization, pos: int, direction: int) -> Factorization:
    """Elementary Hurwitz move at 1-based position ``pos``.

    ``direction=+1`` turns (A, B) into (A B A^-1, A); ``-1`` undoes it,
    turning (A, B) into (B, B^-1 A B).
    """
    k = len(f.factors)
    if not 1 <= pos <= k - 1:
        raise IndexError(f"no Hurwitz move at position {pos} for {k} factors")
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    fs = list(f.factors)
    x, y = fs[pos - 1], fs[pos]
    if direction == 1:
        new = HalfTwist(compose(as_braid(x), y.conjugator).free_reduced(), y.index)
        fs[pos - 1], fs[pos] = new, x
    else:
        new = HalfTwist(compose(invert(as_braid(y)), x.conjugator).free_reduced(), x.index)
        fs[pos - 1], fs[pos] = y, new
    return Factorization(f.strands, tuple(fs))


def _node_key(f: Factorization) -> tuple[ArtinKey, ...]:
    return tuple(artin_key(as_braid(h)) for h in f.factors)


def hurwitz_search(f: Factorization, g: Factorization, depth: int,
                   budget: int = 100_000, conjugation: bool = False,
                   max_letters: int = 40_000_000) -> SearchResult:
    """Breadth-first search for a chain of Hurwitz moves from f to g.

    Nodes are identified by the tuple of their factors' Artin keys. Moves are
    tried in the order (position, +1), (position, -1); with ``conjugation``
    the global conjugations by sigma_i^{+-1} are added. The search only
    reports what it found; "exhausted" is not a proof of inequivalence beyond
    ``depth``.

    ``budget`` caps the number of visited nodes and ``max_letters`` the total
    size of the stored Artin images, which grows much faster than the node
    count; hitting either gives "budget_exceeded".
    """
    if f.strands != g.strands or len(f) != len(g):
        raise ValueError("factorizations must have equal strands and length")
    target = _node_key(g)
    start = tuple(_twist_pair(h) for h in f.factors)
    start_key = tuple(fwd for fwd, _ in start)
    if start_key == target:
        return SearchResult("connected", [], visited=1)
    moves = [(p, d) for p in range(1, len(f)) for d in (1, -1)]
    if conjugation:
        moves += [(0, s) for i in range(1, f.strands) for s in (i, -i)]
    conj = {s: _twist_pair_of(BraidWord(f.strands, (s,))) for p, s in moves if p == 0}
    parent = {start_key: None}
    letters_held = 0
    frontier = deque([(start, start_key)])
    level = 0
    while frontier and level < depth:
        level += 1
        next_frontier = deque()
        for node, key in frontier:
            for mv in moves:
                if mv[0] == 0:
                    child = tuple(_conjugate_pair(conj[mv[1]], h) for h in node)
                else:
                    child = _move_pairs(node, *mv)
                ck = tuple(fwd for fwd, _ in child)
                if ck in parent:
                    continue
                parent[ck] = (key, mv)
                if ck == target:
                    return SearchResult("connected", _unwind(parent, ck),
                                        visited=len(parent), depth_reached=level)
                letters_held += _pair_size(child)
                if len(parent) >= budget or letters_held > max_letters:
                    return SearchResult("budget_exceeded", visited=len(parent),
                                        depth_reached=level)
                next_frontier.append((child, ck))
        frontier = next_frontier
    return SearchResult("exhausted", visited=len(parent), depth_reached=level)


# The search carries each factor as the pair (key of h, key of h^-1) and
# composes keys directly, so a move costs two substitutions instead of a
# rescan of an ever longer conjugator word.

def _twist_pair_of(b: BraidWord) -> tuple[ArtinKey, ArtinKey]:
    return artin_key(b), artin_key(invert(b))


def _twist_pair(h: HalfTwist) -> tuple[ArtinKey, ArtinKey]:
    return _twist_pair_of(as_braid(h))


def _pair_size(node):
    return sum(len(w) for pair in node for key in pair for w in key.images)


def _conjugate_pair(c, h):
    # c h c^-1
    return c[0].then(h[0]).then(c[1]), c[0].then(h[1]).then(c[1])


def _move_pairs(node, pos, direction):
    fs = list(node)
    x, y = fs[pos - 1], fs[pos]
    if direction == 1:
        fs[pos - 1], fs[pos] = _conjugate_pair(x, y), x
    else:
        fs[pos - 1], fs[pos] = y, _conjugate_pair((y[1], y[0]), x)
    return tuple(fs)


def _unwind(parent, key):
    path = []
    while parent[key] is not None:
        key, mv = parent[key]
        path.append(mv)
    return path[::-1]


def closure_invariants(f: Factorization) -> ClosureInvariants:
    b = product(f)
    comps = cycle_count(permutation(b))
    sl = exponent_sum(b) - f.strands if comps == 1 else None
    return ClosureInvariants(components=comps, euler_char=f.strands - len(f), self_linking=sl)


class FactorizationFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_factorization(text: str) -> Factorization:
    """Parse ``m k`` followed by k lines ``i : w`` (w a braid word, maybe empty).

    Blank lines and ``#`` comments are ignored.
    """
    lines = [(no, ln.split("#", 1)[0].strip()) for no, ln in enumerate(text.splitlines(), 1)]
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines:
        raise FactorizationFormatError("empty factorization file")
    no, header = lines[0]
    try:
        m, k = (int(tok) for tok in header.split())
    except ValueError:
        raise FactorizationFormatError("header must be 'm k'", no) from None
    if m < 1 or k < 0:
        raise FactorizationFormatError("need m >= 1 and k >= 0", no)
    body = lines[1:]
    if len(body) != k:
        raise FactorizationFormatError(f"expected {k} factor lines, found {len(body)}",
                                       body[-1][0] if body else no)
    factors = []
    for no, ln in body:
        idx, sep, word = ln.partition(":")
        if not sep:
            raise FactorizationFormatError("factor line must be 'i : w'", no)
        try:
            i = int(idx)
            letters = tuple(int(tok) for tok in word.split())
            factors.append(HalfTwist(BraidWord(m, letters), i))
        except ValueError as exc:
            raise FactorizationFormatError(str(exc), no) from None
    return Factorization(m, tuple(factors))


def format_factorization(f: Factorization) -> str:
    lines = [f"{f.strands} {len(f)}"]
    lines += [f"{h.index} : {h.conjugator}".rstrip() for h in f.factors]
    return "\n".join(lines) + "\n"
