"""Per-n reports for the two-variant family and their JSON / CSV / text
encodings.

Every report re-runs the whole pipeline for one n and records which claims
failed; :func:`family_report` fans out over n and returns reports ordered by
n whatever the completion order.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .braid import braids_equal
from .burau import knot_determinant
from .cover import compare_forms, cover_form
from .factorization import beta_family, closure_invariants, product
from .fixtures import Fixtures, default_fixtures, load_fixtures
from .freegroup import cyclic_canonical
from .presentation import parse_relation, tietze_simplify, vk_presentation
from .qform import equivalent

__all__ = [
    "FamilyReport",
    "CSV_COLUMNS",
    "REPORT_FORMAT",
    "expected_relations",
    "relators_match",
    "run_one",
    "family_report",
    "to_json",
    "to_csv",
    "to_text",
    "schema",
]

REPORT_FORMAT = "braidsurf-family-report"
REPORT_VERSION = 1

# frozen: append new columns at the end only
CSV_COLUMNS = (
    "n",
    "boundary_equal",
    "relators_match_1",
    "relators_match_2",
    "pi1_variant1",
    "pi1_variant2",
    "h1_variant1",
    "h1_variant2",
    "gram1",
    "gram2",
    "det1",
    "det2",
    "represents_minus_two_1",
    "represents_minus_two_2",
    "forms_equivalent",
    "certificate",
    "knot_determinant",
    "self_linking",
    "euler_char",
    "failures",
)


def _product_word(lo: int, hi: int) -> str:
    return " ".join(f"γ{j}" for j in range(lo, hi + 1))


def expected_relations(n: int, variant: int) -> list[str]:
    """The relation each factor of the family must induce, in factor order."""
    m = n + 3
    if variant == 1:
        head = ["γ1 = γ2 γ3 γ2^-1", "γ1 = γ3"]
    elif variant == 2:
        head = ["γ2 = γ3^-1 γ2^-1 γ1 γ2 γ3", "γ1 = γ2"]
    else:
        raise ValueError("variant must be 1 or 2")
    w = _product_word(1, m - 1)
    winv = " ".join(f"γ{j}^-1" for j in range(m - 1, 0, -1))
    rels = head + ["γ1 = γ2", f"{w} γ{m} {winv} = γ2"]
    rels += [f"γ{j} = γ{j + 1}" for j in range(n + 2, 2, -1)]
    return rels


def relators_match(n: int, variant: int, fixtures: Fixtures | None = None) -> bool:
    f = beta_family(n, variant, fixtures)
    got = [cyclic_canonical(r) for r in vk_presentation(f).relators]
    want = [cyclic_canonical(parse_relation(s)) for s in expected_relations(n, variant)]
    return got == want


@dataclass
class FamilyReport:
    n: int
    boundary_equal: bool
    relators_match_1: bool
    relators_match_2: bool
    pi1_variant1: str
    pi1_variant2: str
    h1_variant1: list[int]
    h1_variant2: list[int]
    gram1: list[list[int]]
    gram2: list[list[int]]
    det1: int
    det2: int
    represents_minus_two_1: bool | None
    represents_minus_two_2: bool | None
    forms_equivalent: bool
    certificate: str
    knot_determinant: int
    self_linking: int | None
    euler_char: int
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def run_one(n: int, fixtures: Fixtures | None = None) -> FamilyReport:
    fx = fixtures or default_fixtures()
    f1, f2 = beta_family(n, 1, fx), beta_family(n, 2, fx)
    expected_det = 16 * n + 31
    boundary = braids_equal(product(f1), product(f2))
    pres = [tietze_simplify(vk_presentation(f)) for f in (f1, f2)]
    covers = [cover_form(f, fx) for f in (f1, f2)]
    g1, g2 = (c.gram.matrix() for c in covers)
    cert = compare_forms(g1, g2)
    kd = knot_determinant(product(f1))
    ci = closure_invariants(f1)
    r1, r2 = (c.represents_minus_two() for c in covers)
    rep = FamilyReport(
        n=n,
        boundary_equal=boundary,
        relators_match_1=relators_match(n, 1, fx),
        relators_match_2=relators_match(n, 2, fx),
        pi1_variant1=pres[0].presentation.format(),
        pi1_variant2=pres[1].presentation.format(),
        h1_variant1=list(covers[0].h1_invariant_factors),
        h1_variant2=list(covers[1].h1_invariant_factors),
        gram1=g1,
        gram2=g2,
        det1=abs(covers[0].det),
        det2=abs(covers[1].det),
        represents_minus_two_1=r1,
        represents_minus_two_2=r2,
        forms_equivalent=cert.verdict == "equivalent",
        certificate=cert.verdict + (f": {cert.witness}" if cert.witness else ""),
        knot_determinant=kd,
        self_linking=ci.self_linking,
        euler_char=ci.euler_char,
    )
    checks = {
        "boundary_equal": boundary,
        "relators_1": rep.relators_match_1,
        "relators_2": rep.relators_match_2,
        "pi1_1": pres[0].presentation.is_infinite_cyclic(),
        "pi1_2": pres[1].presentation.is_infinite_cyclic(),
        "homology_1": not covers[0].h1_invariant_factors and covers[0].h2_rank == 2,
        "homology_2": not covers[1].h1_invariant_factors and covers[1].h2_rank == 2,
        "gram1_class": len(g1) == 2 and equivalent(g1, [[-2 * n - 4, -1], [-1, -8]]),
        "det": rep.det1 == rep.det2 == kd == expected_det,
        "represents_minus_two": r1 is False and r2 is True,
        "forms_inequivalent": cert.verdict == "inequivalent",
        "closure": ci.components == 1 and ci.self_linking == 1 and ci.euler_char == -1,
    }
    rep.failures = [name for name, ok in checks.items() if not ok]
    return rep


def _run_path(args):
    n, path = args
    return run_one(n, load_fixtures(path) if path else None)


def family_report(ns, fixtures: Fixtures | None = None, jobs: int = 1,
                  fixtures_path: str | Path | None = None) -> list[FamilyReport]:
    """Reports for every n in ``ns``, ordered by n.

    With ``jobs > 1`` the n are processed in worker processes, each loading
    the fixtures from ``fixtures_path`` (or the packaged default).
    """
    ns = sorted(set(ns))
    if jobs > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            path = str(fixtures_path) if fixtures_path else None
            return list(pool.map(_run_path, [(n, path) for n in ns]))
    return [run_one(n, fixtures) for n in ns]


def to_json(reports: list[FamilyReport], fixtures: Fixtures | None = None) -> str:
    fx = fixtures or default_fixtures()
    doc = {
        "format": REPORT_FORMAT,
        "version": REPORT_VERSION,
        "fixtures_digest": fx.digest,
        "all_pass": all(r.passed for r in reports),
        "reports": [asdict(r) for r in reports],
    }
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"


def _cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, list):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def to_csv(reports: list[FamilyReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        d = asdict(r)
        d["failures"] = ";".join(r.failures)
        w.writerow([_cell(d[c]) for c in CSV_COLUMNS])
    return buf.getvalue()


def to_text(reports: list[FamilyReport], fixtures: Fixtures | None = None) -> str:
    fx = fixtures or default_fixtures()
    lines = [f"fixtures {fx.digest[:16]}"]
    for r in reports:
        status = "ok" if r.passed else "FAIL " + ",".join(r.failures)
        lines.append(
            f"n={r.n:<3} det={r.det1}/{r.det2}/{r.knot_determinant} "
            f"pi1={r.pi1_variant1},{r.pi1_variant2} "
            f"Q1={r.gram1} Q2={r.gram2} "
            f"-2: {_cell(r.represents_minus_two_1)}/{_cell(r.represents_minus_two_2)} "
            f"[{r.certificate}] {status}")
    return "\n".join(lines) + "\n"


def schema(name: str = "family-report") -> dict:
    """JSON schema shipped with the package: ``family-report`` or ``cover-report``."""
    from importlib import resources

    raw = resources.files("braidsurf").joinpath(f"data/{name}.schema.json").read_text()
    return json.loads(raw)
