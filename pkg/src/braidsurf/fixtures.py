"""Pinned arc words and convention constants.

The arcs a, b, c_n of the two-variant family are only known through the
relations they induce; the words stored in ``data/pinned.json`` were found
by :func:`braidsurf.presentation.find_arc_word` and are checked against the
expected relators by the test suite and by ``braidsurf arc-pin``.
Reports embed :attr:`Fixtures.digest` so numbers can be traced to the exact
fixture content.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

__all__ = ["Fixtures", "load_fixtures", "default_fixtures"]


@dataclass(frozen=True)
class Fixtures:
    a: tuple[tuple[int, ...], int]
    b: tuple[tuple[int, ...], int]
    c_prefix: tuple[int, ...]
    c_index: int
    epsilon: int
    reverse_order: bool
    digest: str
    source: str

    def c_conjugator(self, n: int) -> tuple[int, ...]:
        """Conjugator of c_n: the prefix, then sigma_{n+2}^-1 ... sigma_3^-1."""
        return self.c_prefix + tuple(-j for j in range(n + 2, 2, -1))


def _parse(raw: bytes, source: str) -> Fixtures:
    try:
        data = json.loads(raw)
        arcs = data["arcs"]
        conv = data["conventions"]
        eps = int(conv["gram_epsilon"])
        order = conv["factor_order"]
        if eps not in (1, -1) or order not in ("listed", "reversed"):
            raise ValueError("bad convention constants")
        fx = Fixtures(
            a=(tuple(arcs["a"]["conjugator"]), int(arcs["a"]["index"])),
            b=(tuple(arcs["b"]["conjugator"]), int(arcs["b"]["index"])),
            c_prefix=tuple(arcs["c"]["conjugator_prefix"]),
            c_index=int(arcs["c"]["index"]),
            epsilon=eps,
            reverse_order=(order == "reversed"),
            digest=hashlib.sha256(raw).hexdigest(),
            source=source,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed fixture file {source}: {exc}") from None
    return fx


def load_fixtures(path: str | Path | None = None) -> Fixtures:
    if path is None:
        return default_fixtures()
    path = Path(path)
    return _parse(path.read_bytes(), str(path))


_default = None


def default_fixtures() -> Fixtures:
    global _default
    if _default is None:
        raw = resources.files("braidsurf").joinpath("data/pinned.json").read_bytes()
        _default = _parse(raw, "braidsurf/data/pinned.json")
    return _default
