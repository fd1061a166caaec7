"""
Command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 oracle budget exhausted. Chambers are addressed by sign strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import gfan, groupoid, paths
from .arrangement import Arrangement, chamber_json
from .errors import BudgetExceeded, ConsistencyError, DeligneError
from .skeleton import build_skeleton, export_dot
from .verify import run_all

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _load_json(source: str):
    text = source if source.lstrip().startswith("{") else Path(source).read_text()
    return json.loads(text)


def _arrangement(args) -> Arrangement:
    return Arrangement.from_json(_load_json(args.arrangement))


def _labeling(args):
    if not args.labeling:
        return None
    data = json.loads(args.labeling)
    if isinstance(data, dict):
        # {"1": [1, 0], "2": [0, 1]}
        return {tuple(ray): int(label) for label, ray in data.items()}
    return [tuple(r) for r in data]


def _skeleton(args, arr=None):
    arr = arr or _arrangement(args)
    return build_skeleton(arr, args.base, _labeling(args))


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_chambers(args) -> int:
    arr = _arrangement(args)
    simplicial = arr.is_essential() and arr.is_simplicial()
    rows, listing = [], []
    for c in arr.chambers:
        rays = arr.chamber_rays(c) if simplicial else None
        rows.append(chamber_json(arr, c, rays))
        listing.append(f"{c.id:4d}  {c.sign}" + (f"  {[list(r) for r in rays]}" if rays else ""))
    payload = {"count": len(rows), "simplicial": simplicial, "chambers": rows}
    _emit(args, payload, f"{len(rows)} chambers\n" + "\n".join(listing))
    return EXIT_OK


def cmd_skeleton(args) -> int:
    sk = _skeleton(args)
    if args.dot or args.format == "dot":
        sys.stdout.write(export_dot(sk))
        return EXIT_OK
    arr = sk.arrangement
    text = "\n".join(
        f"{arr.chambers[a.source].sign} -s{a.label}-> {arr.chambers[a.target].sign}" for a in sk.arrows
    )
    _emit(args, sk.to_json(), text)
    return EXIT_OK


def cmd_atoms(args) -> int:
    sk = _skeleton(args)
    atoms = paths.enumerate_atoms(sk, getattr(args, "from"), args.to)
    words = [a.render() for a in atoms]
    _emit(args, {"atoms": words}, "\n".join(w or "()" for w in words))
    return EXIT_OK


def cmd_nf(args) -> int:
    sk = _skeleton(args)
    p = paths.path_from_word(sk, args.base or sk.base, paths.parse_word(args.word))
    nf = paths.deligne_normal_form(p, args.budget)
    payload = {"factors": [f.render() for f in nf.factors], "normal_form": nf.render()}
    _emit(args, payload, nf.render())
    return EXIT_OK


def cmd_equal(args) -> int:
    sk = _skeleton(args)
    start = args.base or sk.base
    if "~" in args.word_a or "~" in args.word_b:
        m1 = groupoid.parse_morphism(sk, start, args.word_a)
        m2 = groupoid.parse_morphism(sk, start, args.word_b)
        verdict = groupoid.equal_bounded(m1, m2, budget=args.budget or 20000)
    else:
        p = paths.path_from_word(sk, start, paths.parse_word(args.word_a))
        q = paths.path_from_word(sk, start, paths.parse_word(args.word_b))
        same = paths.equal_positive(p, q, args.budget)
        verdict = groupoid.Verdict.EQUAL if same else groupoid.Verdict.UNEQUAL
    _emit(args, {"verdict": verdict.value}, verdict.value)
    return EXIT_BUDGET if verdict is groupoid.Verdict.INCONCLUSIVE else EXIT_OK


def cmd_braid(args) -> int:
    sk = _skeleton(args)
    rel = paths.braid_relation(sk, args.base or sk.base, args.i, args.j, args.budget)
    payload = {
        "m": rel.m,
        "word_a": paths.render_word(rel.word_a),
        "word_b": paths.render_word(rel.word_b),
        "equivalent": rel.equivalent,
    }
    text = f"m = {rel.m}\n{payload['word_a']} ~ {payload['word_b']}: {rel.equivalent}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_gfan(args) -> int:
    if args.action == "reconstruct":
        data = _load_json(args.arrangement)
        rec = gfan.arrangement_from_g_matrices(data["dim"], data["matrices"])
        payload = {
            **rec.arrangement.to_json(),
            "matching": [rec.arrangement.chambers[c].sign for c in rec.matching],
            "complete": rec.complete,
        }
        text = "\n".join(
            [f"{len(rec.arrangement)} hyperplanes: {[list(n) for n in rec.arrangement.normals]}"]
            + [f"matrix {k} -> {rec.arrangement.chambers[c].sign}" for k, c in enumerate(rec.matching)]
            + [f"complete: {rec.complete}"]
        )
        _emit(args, payload, text)
        return EXIT_OK
    sk = _skeleton(args)
    mats = [gfan.g_matrix(sk, c) for c in sk.arrangement.chambers]
    payload = {"dim": sk.rank, "matrices": [g.to_json() for g in mats]}
    text = "\n".join(
        f"{sk.arrangement.chambers[g.chamber].sign}  {[list(r) for r in g.rows]}" for g in mats
    )
    _emit(args, payload, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    arr = _arrangement(args)
    results = run_all(arr, args.base, _labeling(args), args.max_length, args.budget)
    ok = all(r.status != "fail" for r in results)
    payload = {"ok": ok, "suites": [vars(r) for r in results]}
    _emit(args, payload, "\n".join(r.line() for r in results))
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deligne",
        description="Chambers, skeleton graphs, atoms and Deligne normal forms of simplicial arrangements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help, formats=("text", "json"), actions=None):
        p = sub.add_parser(name, help=help)
        if actions:
            p.add_argument("action", choices=actions)
        p.add_argument("arrangement", help="arrangement JSON file, or inline JSON")
        p.add_argument("--base", help="base chamber as a sign string, e.g. ++++")
        p.add_argument("--labeling", help="base rays in label order as JSON, e.g. [[1,0],[0,1]]")
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--budget", type=int, default=None, help="oracle class-size limit")
        p.set_defaults(func=fn)
        return p

    add("chambers", cmd_chambers, "list chambers")
    p = add("skeleton", cmd_skeleton, "labeled skeleton graph", ("text", "json", "dot"))
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p = add("atoms", cmd_atoms, "minimal galleries between two chambers")
    p.add_argument("--from", required=True)
    p.add_argument("--to", required=True)
    p = add("nf", cmd_nf, "Deligne normal form of a positive word")
    p.add_argument("--word", required=True, help='e.g. "s1.s2.s1" (application order)')
    p = add("equal", cmd_equal, "compare two words from the base chamber")
    p.add_argument("--word-a", required=True)
    p.add_argument("--word-b", required=True)
    p = add("braid", cmd_braid, "braid relation for two labels at the base chamber")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    add("gfan", cmd_gfan, "export g-matrices, or reconstruct an arrangement from them",
        actions=["export", "reconstruct"])
    p = add("verify", cmd_verify, "run all invariant suites")
    p.add_argument("--max-length", type=int, default=4, help="path length for the oracle sweep")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: oracle budget exhausted ({exc})", file=sys.stderr)
        return EXIT_BUDGET
    except ConsistencyError as exc:
        print(f"error: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (DeligneError, ValueError, KeyError, OSError, TypeError) as exc:
        # json.JSONDecodeError is a ValueError
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
