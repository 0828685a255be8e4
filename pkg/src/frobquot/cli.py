"""Command-line front end.

Exit codes: 0 success, 1 mathematical validation failure, 2 usage or input
error, 3 inconclusive randomized certification.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

import numpy as np

from .field import FieldError, make_field
from .functors import cok_functor
from .grading import group_L
from .inflation import GridObject, grid_stable_hom, is_projinj
from .mfact import Factorization, fact_stable_hom_dim
from .poly import WindowError
from .rep import InconclusiveError, decompose_fitting
from .serialize import SchemaError, ValidationError, dumps, grid_to_dot, load, to_json
from .tmod import BarModule, _fmt, decompose, stable_hom_dim
from .verify import PROPERTIES, verify
from .wpl import (
    MCMPresentation,
    certify_grid_iso,
    dcok_direct,
    dcok_staged,
    example_6_5_objects,
    happel_seidel_report,
    line_bundle,
)

OK, INVALID, USAGE, INCONCLUSIVE = 0, 1, 2, 3


def _emit(args, text: str):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(args, path):
    return load(path, args.K)


# -- commands ------------------------------------------------------------------------------
def cmd_decompose(args):
    obj = _load(args, args.file)
    rng = np.random.default_rng(args.seed)
    if isinstance(obj, BarModule):
        print(f"bars: {obj.bar_string()}")
        fit = decompose(obj, rng)
        pieces = sorted((l, _fmt(s)) for (l, s), k in fit.items() for _ in range(k))
        print("fitting: " + (" + ".join(f"M({l},{s})" for l, s in pieces) or "0"))
        return OK if fit == obj.bars else INVALID
    if isinstance(obj, GridObject):
        parts = decompose_fitting(obj.rep, rng)
        print(f"{len(parts)} indecomposable summands")
        for k, (Y, _) in enumerate(parts):
            print(f"  [{k}] {obj.like(Y).bar_strings()}")
        return OK
    print("decompose expects a barmodule or grid", file=sys.stderr)
    return USAGE


def cmd_cok(args):
    obj = _load(args, args.file)
    if isinstance(obj, MCMPresentation) or not isinstance(obj, Factorization):
        print("cok expects a factorization over K[z]", file=sys.stderr)
        return USAGE
    F = obj.negate_last() if obj.sign == -1 else obj
    _emit(args, dumps(cok_functor(F, args.window_slack)))
    return OK


def cmd_dcok(args):
    m = _load(args, args.file)
    if not isinstance(m, MCMPresentation):
        print("dcok expects an mcm presentation", file=sys.stderr)
        return USAGE
    mode = "both" if args.both or not (args.staged or args.direct) else ("staged" if args.staged else "direct")
    out = {}
    if mode in ("direct", "both"):
        out["direct"] = dcok_direct(m, args.window_slack)
    if mode in ("staged", "both"):
        out["staged"] = dcok_staged(m, args.window_slack)
    doc = {k: to_json(v) for k, v in out.items()}
    code = OK
    if mode == "both":
        res = certify_grid_iso(out["direct"], out["staged"], np.random.default_rng(args.seed))
        doc["isomorphic"] = res.ok
        if not res.same_bars:
            code = INVALID
        elif not res.certified:
            code = INCONCLUSIVE
    _emit(args, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return code


def cmd_sthom(args):
    A, B = _load(args, args.a), _load(args, args.b)
    if isinstance(A, MCMPresentation) and isinstance(B, MCMPresentation):
        value = fact_stable_hom_dim(A.fact, B.fact)
    elif isinstance(A, Factorization) and isinstance(B, Factorization):
        value = fact_stable_hom_dim(A, B)
    elif isinstance(A, BarModule) and isinstance(B, BarModule):
        value = stable_hom_dim(A, B)
    elif isinstance(A, GridObject) and isinstance(B, GridObject):
        res = grid_stable_hom(A, B)
        if res.inconclusive:
            print(f"inconclusive: window history {res.history}")
            return INCONCLUSIVE
        value = res.value
    else:
        print("sthom expects two objects of the same kind", file=sys.stderr)
        return USAGE
    print(value)
    return OK


def cmd_validate(args):
    try:
        obj = load(args.file, args.K)
    except ValidationError as exc:
        print(f"invalid: {exc}")
        for line in getattr(exc.report, "errors", None) or getattr(exc.report, "failures", []):
            print(f"  {line}")
        return INVALID
    print(f"ok: {to_json(obj)['kind']}")
    return OK


def _parse_degree(text: str):
    try:
        return [int(x) for x in text.replace(" ", "").split(",")]
    except ValueError as exc:
        raise SchemaError(f"degree {text!r} must be comma-separated integers i,j,n") from exc


def cmd_linebundle(args):
    L = group_L(args.p, args.q, args.r)
    l = L.normalize(_parse_degree(args.l))
    _emit(args, dumps(line_bundle(args.p, args.q, args.r, l, args.K)))
    return OK


def example_6_5_table(K, rng=None):
    rng = rng if rng is not None else np.random.default_rng(0)
    rows = []
    for name, m in example_6_5_objects(K):
        G = dcok_direct(m)
        bars = G.bar_strings()
        rows.append(
            {
                "object": name,
                "rank": m.rank(),
                "cells": {f"{i + 1},{j + 1}": b for (i, j), b in sorted(bars.items())},
                "zero": G.is_zero(),
                "projective": (not G.is_zero()) and is_projinj(G, rng),
            }
        )
    return {"kind": "example", "name": "6.5", "weights": [2, 2, 3], "rows": rows}


def golden_path():
    return resources.files("frobquot") / "data" / "example_6_5.json"


def cmd_example(args):
    if args.which == "6.5":
        table = example_6_5_table(args.K, np.random.default_rng(args.seed))
        text = json.dumps(table, indent=2, sort_keys=True) + "\n"
        if args.regenerate:
            with open(args.regenerate, "w", encoding="utf-8") as fh:
                fh.write(text)
        print(f"{'object':<16}{'rank':>5}  cells")
        for row in table["rows"]:
            tag = " (projective)" if row["projective"] else ""
            cells = "  ".join(f"[{c}] {b}" for c, b in row["cells"].items())
            print(f"{row['object']:<16}{row['rank']:>5}  {cells}{tag}")
        golden = json.loads(golden_path().read_text(encoding="utf-8"))
        match = golden == table
        print(f"golden: {'match' if match else 'MISMATCH'}")
        return OK if match else INVALID
    if args.which == "4.6":
        rep = happel_seidel_report(2, 3, args.trials, args.seed, args.K)
        print(f"{'a':>3}{'b':>4}{'mcm':>5}{'S1(3)':>7}{'S2(2)':>7}")
        for a, b, mid, s1, s2 in rep.rows:
            print(f"{a:>3}{b:>4}{mid:>5}{s1:>7}{s2:>7}")
        print(f"agree: {rep.agree} ({len(rep.rows)} pairs, {rep.inconclusive} inconclusive)")
        if rep.inconclusive:
            return INCONCLUSIVE
        return OK if rep.agree else INVALID
    print(f"unknown example {args.which!r}; choose 6.5 or 4.6", file=sys.stderr)
    return USAGE


def cmd_dot(args):
    obj = _load(args, args.file)
    if isinstance(obj, MCMPresentation):
        obj = dcok_direct(obj, args.window_slack)
    if not isinstance(obj, GridObject):
        print("dot expects a grid or an mcm presentation", file=sys.stderr)
        return USAGE
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(grid_to_dot(obj))
    return OK


def cmd_verify(args):
    if args.property not in PROPERTIES:
        print(f"unknown property {args.property!r}; choose from {', '.join(PROPERTIES)}", file=sys.stderr)
        return USAGE
    trials = args.count if args.count is not None else args.trials
    seed = args.vseed if args.vseed is not None else args.seed
    rep = verify(args.property, trials, seed, args.K, retries=args.retries, jobs=args.jobs)
    print(json.dumps(rep.to_json(), sort_keys=True))
    return OK if rep.ok else INVALID


# -- parser ----------------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    def flags(suppress):
        # subcommands take the same flags; SUPPRESS keeps them from resetting values given earlier
        d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        fp = argparse.ArgumentParser(add_help=False)
        fp.add_argument("--seed", type=int, default=d(0))
        fp.add_argument("--field", default=d("f5"), help="f5, f101, ... or rational")
        fp.add_argument("--window-slack", type=int, default=d(2))
        fp.add_argument("--trials", type=int, default=d(50))
        return fp

    common = flags(True)
    ap = argparse.ArgumentParser(prog="frobquot", description=__doc__, parents=[flags(False)],
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="bars and Fitting summands")
    p.add_argument("file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("cok", parents=[common], help="cokernel functor of a factorization")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_cok)

    p = sub.add_parser("dcok", parents=[common], help="double cokernel of an mcm presentation")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--staged", action="store_true")
    g.add_argument("--direct", action="store_true")
    g.add_argument("--both", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dcok)

    p = sub.add_parser("sthom", parents=[common], help="stable Hom dimension")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_sthom)

    p = sub.add_parser("validate", parents=[common], help="load and validate a file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("linebundle", parents=[common], help="line bundle presentation")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("r", type=int)
    p.add_argument("l", help="degree as i,j,n")
    p.add_argument("--out")
    p.set_defaults(func=cmd_linebundle)

    p = sub.add_parser("example", parents=[common], help="bundled examples 6.5 and 4.6")
    p.add_argument("which")
    p.add_argument("--regenerate", metavar="PATH", help="write the computed 6.5 table to PATH")
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("dot", parents=[common], help="DOT drawing of a grid")
    p.add_argument("file")
    p.add_argument("output")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("verify", parents=[common], help="randomized property check")
    p.add_argument("property")
    p.add_argument("count", type=int, nargs="?")
    p.add_argument("vseed", type=int, nargs="?")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--retries", type=int, default=0, help="re-seeded retries for inconclusive trials")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.K = make_field(args.field)
    except FieldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    try:
        return args.func(args)
    except (SchemaError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except ValidationError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return INVALID
    except WindowError as exc:
        print(f"window error: {exc}", file=sys.stderr)
        return INVALID
    except InconclusiveError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
