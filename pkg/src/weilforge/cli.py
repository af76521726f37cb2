"""Command line interface.

Subcommands: restrict, invariants, solvedeg, solve, verify, bench, gen.
Exit code is 0 unless a verification run recorded a FAIL.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .errors import WeilforgeError
from .fields import ExtensionField, parse_field_spec
from .groebner import ensure_gb
from .instances import InstanceSpec, random_system_gen
from .invariants import (
    betti_table,
    derive_homological_invariants,
    hilbert_series,
    krull_dimension,
    multiplicity,
)
from .macaulay import build_macaulay, rref, solving_degree
from .ring import PolySystem, render_polynomial
from .solutions import enumerate_affine_solutions
from .sysfile import SystemFile, parse_system_file, render_system_file
from .verify import run_battery, run_verification_suite, CHECKS
from .weil import WeilContext, weil_restrict_system


def _load_system(args) -> SystemFile:
    with open(args.input, "r", encoding="utf-8") as fh:
        sf = parse_system_file(fh.read())
    if args.field:
        field = parse_field_spec(args.field)
        from .ring import Ring, parse_polynomial
        ring = Ring(field, sf.ring.names)
        polys = [parse_polynomial(render_polynomial(f), ring) for f in sf.system]
        sf = SystemFile(field, ring, PolySystem(ring, polys),
                        sf.add_field_equations, sf.extension)
    return sf


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_restrict(args) -> int:
    sf = _load_system(args)
    field = sf.field
    if not isinstance(field, ExtensionField):
        raise WeilforgeError("restriction needs an extension field (GF(p)[a]/...)")
    system = sf.effective_system()
    ring = sf.ring
    if args.homogenize:
        from .ring import homogenize
        ring = ring.extend_homogenized("t")
        system = PolySystem(ring, [homogenize(f, ring) for f in system])
    ctx = WeilContext(field, ring)
    W = weil_restrict_system(ctx, system)
    out_ring = ctx.target
    polys = list(W)
    if args.homogenize_output:
        from .ring import homogenize
        out_ring = ctx.target.extend_homogenized("t")
        polys = [homogenize(f, out_ring) for f in polys]
    lines = [render_polynomial(f) for f in polys]
    payload = {"variables": list(out_ring.names), "polynomials": lines}
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_invariants(args) -> int:
    sf = _load_system(args)
    system = sf.effective_system()
    gb = ensure_gb(system, args.cap_degree)
    hs = hilbert_series(gb, args.cap_degree)
    table = betti_table(gb, degree_cap=args.cap_degree)
    rep = derive_homological_invariants(table, gb, args.cap_degree)
    payload = {
        "hilbert_series": hs.render(),
        "dimension": rep.dimension,
        "multiplicity": multiplicity(gb, args.cap_degree),
        "regularity_ideal": rep.reg_ideal,
        "regularity_quotient": rep.reg_quotient,
        "regularity_initial_bound": rep.reg_initial_quotient,
        "projective_dimension": rep.proj_dim,
        "minimal_generators": rep.min_generators,
        "cohen_macaulay": rep.is_cohen_macaulay,
        "complete_intersection": rep.is_complete_intersection,
        "betti": table.to_json(),
    }
    text = "\n".join([
        f"Hilbert series    {hs.render()}",
        f"dimension         {rep.dimension}",
        f"multiplicity      {payload['multiplicity']}",
        f"reg (ideal)       {rep.reg_ideal}",
        f"proj. dimension   {rep.proj_dim}",
        f"minimal gens      {rep.min_generators}",
        f"Cohen-Macaulay    {rep.is_cohen_macaulay}",
        f"complete inters.  {rep.is_complete_intersection}",
        "Betti table:",
        table.render(),
    ])
    _emit(args, payload, text)
    return 0


def cmd_solvedeg(args) -> int:
    sf = _load_system(args)
    system = sf.effective_system()
    result = solving_degree(system, d_max=args.cap_degree,
                            exact_blocks=args.exact_blocks,
                            threads=args.threads,
                            oracle_cap=args.cap_degree)
    payload = {
        "solving_degree": result.degree,
        "trace": [row.__dict__ for row in result.trace],
    }
    if args.format == "csv":
        print(result.trace_csv(), end="")
        return 0
    text = f"solving degree: {result.degree}\n" + result.trace_csv()
    _emit(args, payload, text)
    return 0


def cmd_solve(args) -> int:
    sf = _load_system(args)
    system = sf.effective_system()
    sols = enumerate_affine_solutions(system, budget=args.budget)
    field = sf.field
    rendered = [tuple(field.render_code(c) for c in point) for point in sols]
    payload = {"count": len(sols), "solutions": [list(p) for p in rendered]}
    text = "\n".join(", ".join(p) for p in rendered) + f"\n# {len(sols)} solutions"
    _emit(args, payload, text)
    return 0


def cmd_gen(args) -> int:
    spec = InstanceSpec(seed=args.seed, q=args.q, n=args.n, m=args.m,
                        r=args.r, degrees=tuple(args.degrees),
                        homogeneous=args.homogeneous,
                        field_equations=args.field_equations,
                        density=args.density)
    bundle = random_system_gen(spec)
    from .fields import render_field_spec
    sf = SystemFile(bundle.ext, bundle.ring, bundle.system)
    print(render_system_file(sf), end="")
    return 0


def cmd_verify(args) -> int:
    from . import batteries
    targets = args.checks.split(",") if args.checks else sorted(CHECKS)
    if args.instances:
        with open(args.instances, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        specs = [InstanceSpec(
            seed=item["seed"], q=item["q"], n=item["n"], m=item["m"],
            r=item["r"], degrees=tuple(item.get("degrees", [2])),
            homogeneous=item.get("homogeneous", False),
            field_equations=item.get("field_equations", False),
            density=item.get("density", 0.5),
        ) for item in raw]
        report = run_verification_suite(targets, specs,
                                        degree_cap=args.cap_degree,
                                        threads=args.threads)
    else:
        battery = (batteries.default_battery() if args.profile == "acceptance"
                   else batteries.smoke_battery())
        battery = {cid: battery[cid] for cid in targets if cid in battery}
        report = run_battery(battery, degree_cap=args.cap_degree,
                             threads=args.threads)
    if args.format == "json":
        print(report.render_json())
    elif args.format == "csv":
        print(report.render_csv(), end="")
    else:
        print(report.render_text())
    return 1 if report.has_fail else 0


def cmd_bench(args) -> int:
    """Build a large GF(2) Macaulay matrix and time its elimination."""
    spec = InstanceSpec(seed=args.seed, q=2, n=1, m=args.m, r=args.r,
                        degrees=(2,), homogeneous=False, density=0.5)
    bundle = random_system_gen(spec)
    d = args.degree
    M = build_macaulay(bundle.system, d)
    t0 = time.perf_counter()
    res = rref(M, threads=args.threads)
    dt = time.perf_counter() - t0
    rows, cols = M.shape
    payload = {"rows": rows, "cols": cols, "rank": res.rank,
               "elapsed_s": round(dt, 3)}
    _emit(args, payload,
          f"Macaulay {rows} x {cols} over GF(2): rank {res.rank} in {dt:.3f}s")
    return 0


_GLOBAL_FLAGS = [
    (("--seed",), {"type": int, "default": 1, "help": "PRNG seed"}),
    (("--cap-degree",), {"type": int, "default": 24,
                         "help": "degree cap for basis/solving computations"}),
    (("--threads",), {"type": int, "default": 1}),
    (("--format",), {"choices": ("text", "json", "csv"), "default": "text"}),
    (("--field",), {"default": None,
                    "help": "override the input file's field specification"}),
    (("--extension",), {"default": None,
                        "help": "declare an extension field spec for restriction"}),
]


def _common_parser(suppress_defaults: bool) -> argparse.ArgumentParser:
    # the same flags are accepted before and after the subcommand; the
    # per-subcommand copy suppresses defaults so it never clobbers values
    # already parsed at the top level
    p = argparse.ArgumentParser(add_help=False)
    for names, kw in _GLOBAL_FLAGS:
        kw = dict(kw)
        if suppress_defaults:
            kw["default"] = argparse.SUPPRESS
        p.add_argument(*names, **kw)
    return p


def build_parser():
    root_common = _common_parser(suppress_defaults=False)
    sub_common = _common_parser(suppress_defaults=True)
    parser = argparse.ArgumentParser(
        prog="weilforge",
        description="Weil restriction of polynomial systems: restriction, "
                    "solving degrees, invariants, verification",
        parents=[root_common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("restrict", help="Weil restriction of a system file",
                       parents=[sub_common])
    p.add_argument("--input", required=True)
    p.add_argument("--homogenize", action="store_true",
                   help="restrict the homogenized system (variables t1..tn)")
    p.add_argument("--homogenize-output", action="store_true",
                   help="homogenize each restricted polynomial (variable t)")
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("invariants", help="homological invariants of the ideal",
                       parents=[sub_common])
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("solvedeg", help="measure the solving degree",
                       parents=[sub_common])
    p.add_argument("--input", required=True)
    p.add_argument("--exact-blocks", action="store_true",
                   help="per-degree blocks (homogeneous systems only)")
    p.set_defaults(func=cmd_solvedeg)

    p = sub.add_parser("solve", help="exhaustive affine solutions",
                       parents=[sub_common])
    p.add_argument("--input", required=True)
    p.add_argument("--budget", type=int, default=1 << 22)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="run the verification suite",
                       parents=[sub_common])
    p.add_argument("--checks", default=None,
                   help="comma-separated check ids (default: all)")
    p.add_argument("--instances", default=None,
                   help="JSON file with instance specifications")
    p.add_argument("--profile", choices=("smoke", "acceptance"),
                   default="smoke")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time a large GF(2) elimination",
                       parents=[sub_common])
    p.add_argument("--m", type=int, default=6)
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--degree", type=int, default=8)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="emit a seeded random system file",
                       parents=[sub_common])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--degrees", type=int, nargs="+", default=[2])
    p.add_argument("--homogeneous", action="store_true")
    p.add_argument("--field-equations", action="store_true")
    p.add_argument("--density", type=float, default=0.5)
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WeilforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
