"""Command-line interface: compute, oracle, sweep, selftest."""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from .coeffring import format_poly
from .quiver import RootClass, quiver_summary
from .types import MultiType, ParseError, generic_exists, h_omega, multitypes, parse_multitype

SCHEMA = 1

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def compute_report(mt: MultiType) -> dict:
    start = time.perf_counter()
    h = h_omega(mt)
    quiver = quiver_summary(mt)
    coeffs = list(h.coeffs)
    rc = quiver["root_class"]
    return {
        "schema": SCHEMA,
        "input": str(mt),
        "h_polynomial": coeffs,
        "h_string": format_poly(coeffs),
        "d_omega": quiver["d_omega"],
        "root_class": rc,
        "quiver": quiver,
        "generic_exists": generic_exists(mt),
        "root_correspondence": bool(coeffs) == (rc != RootClass.NOT_ROOT.value),
        "timing_s": round(time.perf_counter() - start, 6),
    }


def format_report(rep: dict) -> str:
    qv = rep["quiver"]
    lines = [
        f"multitype:      {rep['input']}",
        f"H(q):           {rep['h_string']}",
        f"coefficients:   {rep['h_polynomial']}",
        f"root class:     {rep['root_class']}",
        f"d_omega:        {rep['d_omega']}",
        f"quiver:         center {qv['center']}, legs {qv['legs']}, loops {qv['loops']}",
        f"generic orbits: {'yes' if rep['generic_exists'] else 'no'}",
        f"time:           {rep['timing_s']:.3f} s",
    ]
    if not rep["root_correspondence"]:
        lines.append("WARNING: H(q) and the root class disagree")
    return "\n".join(lines)


def _parse(text: str) -> MultiType:
    try:
        return parse_multitype(text)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def cmd_compute(args) -> int:
    rep = compute_report(_parse(args.multitype))
    print(json.dumps(rep) if args.json else format_report(rep))
    return EXIT_OK if rep["root_correspondence"] else EXIT_FAIL


def cmd_oracle(args) -> int:
    from .oracle import InsufficientQError, UnsupportedQError, oracle_vs_formula

    mt = _parse(args.multitype)
    if mt.n > 2:
        print("error: oracle supports n <= 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        rep = oracle_vs_formula(mt, args.q)
    except UnsupportedQError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InsufficientQError as exc:
        print(f"error: insufficient q: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.json:
        print(json.dumps({"schema": SCHEMA, **rep}))
    else:
        print(f"multitype:  {rep['multitype']}")
        print(f"q:          {rep['q']}")
        print(f"characters: {', '.join(rep['characters'])}")
        print(f"formula:    {rep['formula']}")
        print(f"oracle:     {rep['oracle']}")
        print("match" if rep["match"] else "MISMATCH")
    return EXIT_OK if rep["match"] else EXIT_FAIL


def cmd_sweep(args) -> int:
    reps = [compute_report(mt) for mt in multitypes(args.n, args.k, args.g, ordered=False)]
    reps.sort(key=lambda r: r["input"])
    if args.json:
        print(json.dumps({"schema": SCHEMA, "n": args.n, "k": args.k, "g": args.g, "rows": reps}))
    else:
        width = max(len(r["input"]) for r in reps)
        for r in reps:
            flag = "" if r["root_correspondence"] else "  <-- disagreement"
            print(f"{r['input']:<{width}}  {r['root_class']:<9}  d={r['d_omega']:<3}  H = {r['h_string']}{flag}")
    return EXIT_OK if all(r["root_correspondence"] for r in reps) else EXIT_FAIL


def cmd_selftest(args) -> int:
    from .selftest import run

    return EXIT_OK if run(args.depth) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tensormult",
        description="Multiplicities of generic tensor products of GL_n(F_q) characters.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="H(q), quiver and root class of a multitype")
    c.add_argument("multitype", help='e.g. "g=0; 1:[3] ; 1:[3] ; 1:[3]"')
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_compute)

    o = sub.add_parser("oracle", help="compare with a brute-force GL_1/GL_2 character sum")
    o.add_argument("multitype")
    o.add_argument("--q", type=int, required=True)
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_oracle)

    s = sub.add_parser("sweep", help="tabulate every multitype for given n, k, g")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--g", type=int, default=0)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_sweep)

    t = sub.add_parser("selftest", help="run the invariant suites")
    t.add_argument("--depth", choices=("quick", "full"), default="quick")
    t.set_defaults(func=cmd_selftest)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
