"""Command-line driver.

Exit status: 0 when every checked claim holds, 1 when a claim fails, 2 on bad
input (unreadable or malformed files, bad flags).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import report as rp
from .braid import BraidWord, braids_equal, cycle_count, parse_braid, permutation
from .burau import alexander_of_closure, knot_determinant
from .cover import cover_form
from .factorization import (
    FactorizationFormatError,
    beta_family,
    hurwitz_search,
    parse_factorization,
    product,
)
from .fixtures import load_fixtures
from .presentation import (
    ArcNotFound,
    find_arc_word,
    format_relation,
    tietze_simplify,
    vk_presentation,
    vk_relations,
)

EXIT_OK, EXIT_CLAIM, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """"5", "0..16", "0-16" or comma-separated mixtures; "" is empty."""
    out: list[int] = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        sep = ".." if ".." in part else ("-" if "-" in part[1:] else None)
        try:
            if sep:
                lo, hi = part.split(sep, 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise InputError(f"bad range {text!r}") from None
    if any(n < 0 for n in out):
        raise InputError("n must be nonnegative")
    return sorted(set(out))


def _fixtures(args):
    try:
        return load_fixtures(args.fixtures)
    except (OSError, ValueError) as exc:
        raise InputError(str(exc)) from None


def _load_factorization(path):
    try:
        text = Path(path).read_text() if path != "-" else sys.stdin.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return parse_factorization(text)
    except FactorizationFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _subject(args, fx):
    """The factorization named by FILE or by --n/--variant."""
    if getattr(args, "file", None):
        return _load_factorization(args.file), None
    if args.n is None:
        raise InputError("give a factorization file or --n")
    n = _single_n(args.n)
    return beta_family(n, args.variant, fx), n


def _single_n(text):
    ns = parse_range(text)
    if len(ns) != 1:
        raise InputError("this command takes a single --n")
    return ns[0]


def _emit_record(rec: dict, emit: str, text_lines: list[str]) -> str:
    if emit == "json":
        return json.dumps(rec, ensure_ascii=False, indent=2) + "\n"
    if emit == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(list(rec))
        w.writerow([_csv_cell(v) for v in rec.values()])
        return buf.getvalue()
    return "\n".join(text_lines) + "\n"


def _csv_cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, (list, dict)):
        return json.dumps(v, ensure_ascii=False, separators=(",", ":"))
    return str(v)


def cmd_family(args, out):
    fx = _fixtures(args)
    ns = parse_range(args.n if args.n is not None else "0..16")
    reports = rp.family_report(ns, fx, jobs=args.jobs, fixtures_path=args.fixtures)
    if args.emit == "json":
        out.write(rp.to_json(reports, fx))
    elif args.emit == "csv":
        out.write(rp.to_csv(reports))
    else:
        out.write(rp.to_text(reports, fx))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CLAIM


def cmd_pi1(args, out):
    fx = _fixtures(args)
    f, n = _subject(args, fx)
    rels = [format_relation((p,), b) for p, b in vk_relations(f)]
    res = tietze_simplify(vk_presentation(f, args.mode), budget=args.budget)
    pres = res.presentation
    ok = True
    if n is not None:
        ok = pres.is_infinite_cyclic() and rp.relators_match(n, args.variant, fx)
    rec = {
        "m": f.strands,
        "k": len(f),
        "relations": rels,
        "simplified": pres.format(),
        "generators": len(pres.generators),
        "relators": len(pres.relators),
        "complete": res.complete,
        "infinite_cyclic": pres.is_infinite_cyclic(),
    }
    lines = [f"relations ({len(rels)}):"] + [f"  {r}" for r in rels]
    lines.append(f"simplified: {pres.format()}" + ("" if res.complete else " (budget exhausted)"))
    out.write(_emit_record(rec, args.emit, lines))
    return EXIT_OK if ok else EXIT_CLAIM


def cmd_cover_form(args, out):
    fx = _fixtures(args)
    f, n = _subject(args, fx)
    ch = cover_form(f, fx)
    rec = ch.to_json(len(f))
    rec["boundary_h1_order"] = ch.boundary_h1_order
    rec["fixtures_digest"] = fx.digest
    ok = True
    if n is not None:
        ok = not ch.h1_invariant_factors and abs(ch.det) == 16 * n + 31 and ch.h2_rank == 2
    lines = [
        f"m={rec['m']} k={rec['k']} h2_rank={rec['h2_rank']}",
        f"boundary map: {rec['boundary_map']}",
        f"gram: {rec['gram']}",
        f"det: {rec['det']}  H1(X): {rec['h1'] or 0}  |H1(boundary)|: {ch.boundary_h1_order}",
        f"represents -2: {rec['represents_minus_two']}",
    ]
    out.write(_emit_record(rec, args.emit, lines))
    return EXIT_OK if ok else EXIT_CLAIM


def cmd_alexander(args, out):
    fx = _fixtures(args)
    n = None
    if args.braid is not None:
        if args.strands is None:
            raise InputError("--braid needs --strands")
        try:
            b = parse_braid(args.braid, args.strands)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        f, n = _subject(args, fx)
        b = product(f)
    if b.strands < 2:
        raise InputError("need at least 2 strands")
    delta = alexander_of_closure(b)
    comps = cycle_count(permutation(b))
    det = knot_determinant(b) if comps == 1 else None
    rec = {"strands": b.strands, "components": comps, "alexander": delta.to_json(),
           "alexander_text": str(delta), "determinant": det}
    lines = [f"Delta(t) = {delta}", f"components: {comps}",
             f"determinant: {det if det is not None else 'n/a (link)'}"]
    out.write(_emit_record(rec, args.emit, lines))
    ok = n is None or det == 16 * n + 31
    return EXIT_OK if ok else EXIT_CLAIM


def cmd_hurwitz_search(args, out):
    fx = _fixtures(args)
    if args.files:
        if len(args.files) != 2:
            raise InputError("hurwitz-search takes two factorization files")
        f, g = (_load_factorization(p) for p in args.files)
    else:
        if args.n is None:
            raise InputError("give two factorization files or --n")
        n = _single_n(args.n)
        f, g = beta_family(n, 1, fx), beta_family(n, 2, fx)
    if f.strands != g.strands or len(f) != len(g):
        raise InputError("factorizations must have equal strands and length")
    res = hurwitz_search(f, g, args.depth, budget=args.budget, conjugation=args.conjugation)
    rec = {"status": res.status, "path": res.path, "visited": res.visited,
           "depth_reached": res.depth_reached,
           "same_product": braids_equal(product(f), product(g))}
    lines = [f"status: {res.status}", f"visited: {res.visited}",
             f"depth reached: {res.depth_reached}"]
    if res.path is not None:
        lines.append("path: " + " ".join(f"{p}{'+' if d > 0 else '-'}" if p else f"conj{d}"
                                          for p, d in res.path))
    out.write(_emit_record(rec, args.emit, lines))
    return EXIT_OK


def cmd_arc_pin(args, out):
    fx = _fixtures(args)
    n = _single_n(args.n if args.n is not None else "0")
    m = n + 3
    targets = rp.expected_relations(n, 1)
    pinned = {"a": fx.a, "b": fx.b, "c": (fx.c_conjugator(n), fx.c_index)}
    hints = {"a": (targets[0], fx.a[1]), "b": (targets[1], fx.b[1]),
             "c": (targets[3], fx.c_index)}
    rows = []
    ok = True
    for name, (target, idx) in hints.items():
        try:
            h = find_arc_word(target, idx, args.depth, strands=m)
            found = (list(h.conjugator.letters), h.index)
        except ArcNotFound:
            found = None
        want = (list(pinned[name][0]), pinned[name][1])
        agrees = found is None or _same_twist(found, want, m)
        ok = ok and found is not None and agrees
        rows.append({"arc": name, "target": target, "found": found, "pinned": want,
                     "agrees": agrees})
    lines = [f"{r['arc']}: target {r['target']}; found "
             + (f"{r['found'][1]} : {' '.join(map(str, r['found'][0]))}" if r["found"] else
                f"nothing within length {args.depth}")
             + f"; pinned {r['pinned'][1]} : {' '.join(map(str, r['pinned'][0]))}"
             + ("" if r["agrees"] else "  MISMATCH") for r in rows]
    rec = {"n": n, "max_len": args.depth, "fixtures_digest": fx.digest, "arcs": rows}
    if args.emit == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["arc", "target", "found", "pinned", "agrees"])
        for r in rows:
            w.writerow([_csv_cell(r[c]) for c in ("arc", "target", "found", "pinned", "agrees")])
        out.write(buf.getvalue())
    else:
        out.write(_emit_record(rec, args.emit, lines))
    return EXIT_OK if ok else EXIT_CLAIM


def _same_twist(found, want, m):
    from .factorization import HalfTwist, as_braid

    hs = [as_braid(HalfTwist(BraidWord(m, tuple(w)), i)) for w, i in (found, want)]
    return braids_equal(*hs)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--fixtures", metavar="PATH", help="fixture file (default: packaged)")
    common.add_argument("--emit", choices=("json", "csv", "text"), default="text")
    common.add_argument("--n", help="family parameter; ranges like 0..16 where allowed")
    common.add_argument("--variant", type=int, choices=(1, 2), default=1)
    common.add_argument("--depth", type=int, default=4)
    common.add_argument("--budget", type=int, default=100_000)

    p = argparse.ArgumentParser(prog="braidsurf", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("family", parents=[common], help="full report over a range of n")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("pi1", parents=[common], help="van Kampen presentation, simplified")
    s.add_argument("file", nargs="?")
    s.add_argument("--mode", choices=("single", "full"), default="single")
    s.set_defaults(func=cmd_pi1)

    s = sub.add_parser("cover-form", parents=[common], help="homology of the double branched cover")
    s.add_argument("file", nargs="?")
    s.set_defaults(func=cmd_cover_form)

    s = sub.add_parser("alexander", parents=[common], help="Alexander polynomial of a closure")
    s.add_argument("file", nargs="?")
    s.add_argument("--braid", help='braid word, e.g. "1 1 1"')
    s.add_argument("--strands", type=int)
    s.set_defaults(func=cmd_alexander)

    s = sub.add_parser("hurwitz-search", parents=[common], help="bounded Hurwitz-move search")
    s.add_argument("files", nargs="*")
    s.add_argument("--conjugation", action="store_true", help="also allow global conjugation")
    s.set_defaults(func=cmd_hurwitz_search)

    s = sub.add_parser("arc-pin", parents=[common], help="re-derive the pinned arc words")
    s.set_defaults(func=cmd_arc_pin, depth=6)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"braidsurf: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
