"""Command line front end.

Every run prints one JSON report to stdout:

    {"command": ..., "parameters": ..., "results": ..., "seconds": ..., "version": ...}

with sorted keys, so byte-identical reruns are expected for identical
inputs (the "seconds" field is the one exception).  Domain errors print
{"error": ..., "message": ...} and exit 1; malformed usage exits 2.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import List, Optional

from . import __version__
from .errors import LrcError, UsageError, WildRamificationUnsupported
from .field import make_field, parse_field_spec
from .goodpoly import (
    classify_generic_group,
    construct_witness,
    count_split_places,
    genus_upper,
    split_bounds,
)
from .lrc import (
    build_code,
    encode,
    generator_matrix,
    min_distance_bruteforce,
    repair,
)
from .monodromy import (
    CANDIDATES_BY_DEGREE,
    census,
    even_subgroup_test,
    identify_group,
)
from .poly import Poly, format_poly, is_separable, parse_element, parse_poly

# Reference splitting counts: X^2*(smallest cubic), reproduced by `tables`.
TABLES = {
    "a": {
        "fields": ["2^13", "2^15", "2^17", "2^19"],
        "poly": "x^5+x^3+x^2",
        "expected": [78, 278, 1088, 4332],
    },
    "b": {
        "fields": ["3^7", "3^9", "3^11", "3^13"],
        "poly": "x^5+2*x^3+x^2",
        "expected": [21, 159, 1474, 13338],
    },
    "c": {
        "fields": [
            "19583",
            "19597",
            "19687",
            "19753",
            "19793",
            "19913",
            "19927",
            "19963",
            "19993",
            "19997",
        ],
        "poly": "x^5+x^3+3*x^2",
        "expected": [156, 163, 155, 194, 179, 189, 160, 162, 156, 161],
    },
}


def _ctx_from(args):
    p, m = parse_field_spec(args.field)
    modulus = None
    if getattr(args, "modulus", None):
        modulus = tuple(int(c) for c in args.modulus.split(","))
    return make_field(p, m, modulus)


def _frac(x: Fraction) -> dict:
    return {"exact": f"{x.numerator}/{x.denominator}", "value": float(x)}


def _shape_key(part) -> str:
    return ",".join(str(d) for d in part)


# ---------------- command handlers (each returns the results dict) ----------------


def cmd_field_info(args):
    ctx = _ctx_from(args)
    gen = ctx.multiplicative_generator()
    return {
        "q": ctx.q,
        "p": ctx.p,
        "m": ctx.m,
        "modulus": list(ctx.modulus) if ctx.modulus else None,
        "generator": str(gen),
        "multiplicative_order": ctx.q - 1,
    }


def cmd_classify(args):
    ctx = _ctx_from(args)
    n = args.degree
    info = classify_generic_group(ctx.q, n)
    witness = construct_witness(ctx, n)
    out = {
        "q": ctx.q,
        "n": n,
        "G_n": info.name,
        "order": info.order,
        "witness": format_poly(witness),
        "witness_separable": is_separable(witness),
        "genus_bound": None,
        "split_lower": None,
        "split_upper": None,
    }
    try:
        g = genus_upper(n, info.order, ctx.q)
    except WildRamificationUnsupported:
        return out
    lo, hi = split_bounds(ctx.q, info.order, g, n)
    out.update({"genus_bound": g, "split_lower": lo, "split_upper": hi})
    return out


def cmd_construct(args):
    ctx = _ctx_from(args)
    n = args.degree
    info = classify_generic_group(ctx.q, n)
    witness = construct_witness(ctx, n)
    return {
        "q": ctx.q,
        "n": n,
        "group": info.name,
        "order": info.order,
        "witness": format_poly(witness),
        "witness_coeffs": [str(c) for c in witness.elements()],
        "separable": is_separable(witness),
    }


def cmd_split_count(args):
    ctx = _ctx_from(args)
    f = parse_poly(ctx, args.poly)
    count = count_split_places(f, threads=args.threads)
    out = {
        "q": ctx.q,
        "poly": format_poly(f),
        "degree": f.degree,
        "count": count,
        "group": None,
        "lower": None,
        "upper": None,
        "witness_match": False,
    }
    if 2 <= f.degree <= 5:
        witness = construct_witness(ctx, f.degree)
        if witness == f:
            info = classify_generic_group(ctx.q, f.degree)
            out["witness_match"] = True
            out["group"] = info.name
            try:
                g = genus_upper(f.degree, info.order, ctx.q)
            except WildRamificationUnsupported:
                return out
            lo, hi = split_bounds(ctx.q, info.order, g, f.degree)
            out["lower"], out["upper"] = lo, hi
    return out


def cmd_census(args):
    ctx = _ctx_from(args)
    f = parse_poly(ctx, args.poly)
    sample = None if args.sample == "all" else int(args.sample)
    result = census(f, sample=sample, seed=args.seed)
    shapes = {_shape_key(part): cnt for part, cnt in result.counts}
    out = {
        "q": ctx.q,
        "poly": format_poly(f),
        "total": result.total,
        "skipped": [str(ctx.element(t)) for t in result.skipped],
        "shapes": shapes,
    }
    if f.degree in CANDIDATES_BY_DEGREE:
        ident = identify_group(result)
        out["identified"] = {
            "group": ident.name,
            "order": ident.order,
            "tv_distance": _frac(ident.distance),
            "margin": _frac(ident.margin),
            "ranking": [[name, float(tv)] for name, tv in ident.ranking],
        }
    if f.degree == 5 and f.is_monic() and ctx.p not in (2,):
        try:
            out["even_subgroup"] = even_subgroup_test(f)
        except LrcError:
            out["even_subgroup"] = None
    if args.csv:
        lines = ["shape,count"]
        lines += [f"{key},{cnt}" for key, cnt in sorted(shapes.items())]
        return {"csv": "\n".join(lines), **out}
    return out


def cmd_code(args):
    ctx = _ctx_from(args)
    f = parse_poly(ctx, args.poly)
    code = build_code(f, args.t, max_groups=args.max_sets)
    base = {
        "q": ctx.q,
        "poly": format_poly(f),
        "n": code.n,
        "k": code.k,
        "r": code.r,
        "ell": code.ell,
        "t": code.t,
        "d_designed": code.d_designed,
    }
    if args.action == "build":
        base["group_values"] = [str(ctx.element(v)) for v in code.group_values]
        base["groups"] = [[str(ctx.element(x)) for x in g] for g in code.groups]
        return base
    if args.action == "encode":
        msg = [parse_element(ctx, tok) for tok in args.message.split(",")]
        word = encode(code, msg)
        base["codeword"] = [str(c) for c in word]
        return base
    if args.action == "repair":
        toks = [tok.strip() for tok in args.codeword.split(",")]
        word = [None if tok == "?" else parse_element(ctx, tok) for tok in toks]
        value = repair(code, word, args.erased)
        base["erased"] = args.erased
        base["value"] = str(value)
        return base
    if args.action == "distance":
        exact = min_distance_bruteforce(code)
        base["d_exact"] = exact
        base["matches_designed"] = exact == code.d_designed
        return base
    if args.action == "matrix":
        rows = generator_matrix(code)
        base["matrix"] = [[str(ctx.element(v)) for v in row] for row in rows]
        return base
    raise UsageError(f"unknown code action {args.action!r}")


def cmd_tables(args):
    which = args.which
    names = ["a", "b", "c"] if which == "all" else [which]
    rows = []
    all_match = True
    for name in names:
        spec = TABLES[name]
        for fspec, expected in zip(spec["fields"], spec["expected"]):
            p, m = parse_field_spec(fspec)
            ctx = make_field(p, m)
            f = parse_poly(ctx, spec["poly"])
            t0 = time.perf_counter()
            count = count_split_places(f, threads=args.threads)
            dt = time.perf_counter() - t0
            match = count == expected
            all_match = all_match and match
            rows.append(
                {
                    "table": name,
                    "field": fspec,
                    "q": ctx.q,
                    "poly": spec["poly"],
                    "count": count,
                    "expected": expected,
                    "match": match,
                    "seconds": round(dt, 3),
                }
            )
    out = {"rows": rows, "all_match": all_match}
    if args.csv:
        lines = ["table,field,count,expected,match"]
        lines += [
            f"{r['table']},{r['field']},{r['count']},{r['expected']},{int(r['match'])}"
            for r in rows
        ]
        out["csv"] = "\n".join(lines)
    return out


# ---------------- parser ----------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lrcforge",
        description="Good polynomials over finite fields and the LRC codes they carry.",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_field(p):
        p.add_argument("--field", required=True, help="prime power q or p^m")
        p.add_argument("--modulus", help="c0,c1,...,cm (low first, monic) for F_{p^m}")

    p = sub.add_parser("field-info", help="field parameters and a generator")
    add_field(p)
    p.set_defaults(func=cmd_field_info)

    p = sub.add_parser("classify", help="generic group G_n(q) with witness and bounds")
    add_field(p)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("construct", help="witness polynomial for (q, n)")
    add_field(p)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("split-count", help="count totally split specializations")
    add_field(p)
    p.add_argument("--poly", required=True, help="x^5+3*x^2+1 or c0,c1,...")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_split_count)

    p = sub.add_parser("census", help="factor-shape census across the pencil")
    add_field(p)
    p.add_argument("--poly", required=True)
    p.add_argument("--sample", default="all", help="'all' or a sample size N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("code", help="build and exercise an LRC code")
    code_sub = p.add_subparsers(dest="action", required=True)
    for action in ("build", "encode", "repair", "distance", "matrix"):
        cp = code_sub.add_parser(action)
        add_field(cp)
        cp.add_argument("--poly", required=True, help="the good polynomial f")
        cp.add_argument("--t", type=int, required=True, help="f-degree blocks per point")
        cp.add_argument("--max-sets", type=int, default=None, help="limit group count")
        if action == "encode":
            cp.add_argument("--message", required=True, help="k comma-separated symbols")
        if action == "repair":
            cp.add_argument(
                "--codeword", required=True, help="n comma-separated symbols, ? = erased"
            )
            cp.add_argument("--erased", type=int, required=True)
        cp.set_defaults(func=cmd_code, action=action)
    p.set_defaults(command="code")

    p = sub.add_parser("tables", help="recompute the reference splitting counts")
    p.add_argument("which", nargs="?", choices=["a", "b", "c", "all"], default="all")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_tables)

    return ap


_PARAM_KEYS = (
    "field",
    "modulus",
    "degree",
    "poly",
    "threads",
    "sample",
    "seed",
    "csv",
    "t",
    "max_sets",
    "message",
    "codeword",
    "erased",
    "which",
    "action",
)


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    params = {
        k: getattr(args, k) for k in _PARAM_KEYS if getattr(args, k, None) is not None
    }
    started = time.perf_counter()
    try:
        results = args.func(args)
    except UsageError as err:
        print(json.dumps({"error": type(err).__name__, "message": str(err)}))
        return 2
    except LrcError as err:
        print(json.dumps({"error": type(err).__name__, "message": str(err)}))
        return 1
    except ValueError as err:
        print(json.dumps({"error": "ValueError", "message": str(err)}))
        return 2
    report = {
        "command": args.command,
        "parameters": params,
        "results": results,
        "seconds": round(time.perf_counter() - started, 6),
        "version": __version__,
    }
    print(json.dumps(report, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
