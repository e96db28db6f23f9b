"""Command-line front end.  Every subcommand prints a JSON report; exit
codes are 0 on success/pass, 1 on a verification mismatch, 2 on usage
errors.  The environment variable GRASSCY_MAX_ORDER caps every truncation
order accepted on the command line (default 200)."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .dop import dop_to_json, pf_fit
from .hypergeom import ASeriesSpec, FactorialBundle, a_series, factorial_trick
from .laurent import laurent_from_json, laurent_to_json
from .laxmirror import canonical_gauge_coeffs, lax_operator, mirror_system, period_ct
from .pipeline import rational_series, run_case
from .qh import scalar_operator, verify_conjecture
from .registry import registry_load
from .series import qstr, series_from_json, series_to_json
from .toric import binomial_equations, build_delta, facets_and_reflexivity

EXIT_PASS = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _max_order() -> int:
    try:
        return int(os.environ.get("GRASSCY_MAX_ORDER", "200"))
    except ValueError:
        return 200


def _check_order(value: int, what: str = "order"):
    cap = _max_order()
    if value < 0:
        raise SystemExit(f"{what} must be >= 0")
    if value > cap:
        raise SystemExit(f"{what} {value} exceeds resource cap {cap} (GRASSCY_MAX_ORDER)")


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _parse_degrees(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise SystemExit(f"bad degree list {text!r}; expected e.g. 1,1,3")


def cmd_toric(args) -> int:
    delta = build_delta(args.k, args.n)
    out = {
        "k": args.k,
        "n": args.n,
        "dim": delta.dim,
        "vertices": [
            {"label": list(lab), "vector": list(v)}
            for lab, v in zip(delta.labels, delta.vertices)
        ],
        "binomial_equations": [
            {"a": list(r["a"]), "b": list(r["b"]), "min": list(r["min"]), "max": list(r["max"])}
            for r in binomial_equations(args.k, args.n)
        ],
    }
    if args.facets:
        facets, reflexive = facets_and_reflexivity(delta)
        out["facets"] = [{"normal": list(m), "c": qstr(c)} for m, c in facets]
        out["reflexive"] = reflexive
    _emit(out)
    return EXIT_PASS


def cmd_aseries(args) -> int:
    _check_order(args.order)
    spec = ASeriesSpec(args.k, args.n, args.order, keep_params=args.keep_params,
                       param_degree_bound=args.param_bound)
    f = a_series(spec)
    if args.keep_params:
        _emit({
            "k": args.k,
            "n": args.n,
            "trunc": args.order,
            "nparams": f.nparams,
            "terms": [
                {"m": m, "s": list(s), "c": qstr(c)}
                for (m, s), c in sorted(f.terms.items())
            ],
        })
    else:
        _emit(series_to_json(f))
    return EXIT_PASS


def cmd_phi(args) -> int:
    _check_order(args.order)
    degrees = _parse_degrees(args.degrees)
    a = a_series(ASeriesSpec(args.k, args.n, args.order))
    _emit(series_to_json(factorial_trick(a, FactorialBundle(degrees))))
    return EXIT_PASS


def cmd_pf_fit(args) -> int:
    with open(args.series) as fh:
        f = series_from_json(json.load(fh))
    op = pf_fit(f, max_order=args.max_order, max_zdeg=args.max_degree, guard=args.guard)
    _emit(dop_to_json(op, f.var))
    return EXIT_PASS


def cmd_qh_operator(args) -> int:
    op = scalar_operator(args.k, args.n)
    _emit(dop_to_json(op, "q"))
    return EXIT_PASS


def cmd_verify_conjecture(args) -> int:
    _check_order(args.order)
    rep = verify_conjecture(args.k, args.n, args.order)
    _emit({
        "k": args.k,
        "n": args.n,
        "order": args.order,
        "operator": dop_to_json(rep.operator, "q"),
        "residual_zero": rep.passed,
        "indicial_unique": rep.indicial_unique,
        "pass": rep.passed and rep.indicial_unique,
    })
    return EXIT_PASS if rep.passed and rep.indicial_unique else EXIT_MISMATCH


def _registry(args):
    return registry_load(getattr(args, "registry", None))


def cmd_yukawa(args) -> int:
    _check_order(args.order)
    reg = _registry(args)
    if args.case not in reg:
        raise SystemExit(f"unknown case {args.case!r}; have {sorted(reg)}")
    rc = reg[args.case]
    case = rc.case
    a = a_series(ASeriesSpec(case.k, case.n, rc.series_order))
    phi = factorial_trick(a, FactorialBundle(case.degrees))
    op = pf_fit(phi, max_order=4, max_zdeg=rc.pf_max_zdeg)
    from .mirror_analysis import yukawa_z

    kz3 = yukawa_z(op, case.n0, args.order)
    fixture = rational_series(rc.kz3_numerator, rc.kz3_denominator, "z", args.order)
    ok = kz3 == fixture
    _emit({
        "case": args.case,
        "kz3": series_to_json(kz3),
        "fixture": series_to_json(fixture),
        "fixture_match": ok,
        "pass": ok,
    })
    return EXIT_PASS if ok else EXIT_MISMATCH


def cmd_instanton(args) -> int:
    _check_order(args.count, "count")
    reg = _registry(args)
    if args.case not in reg:
        raise SystemExit(f"unknown case {args.case!r}; have {sorted(reg)}")
    report = run_case(reg[args.case], count=args.count)
    _emit(report.to_json())
    return EXIT_PASS if report.passed else EXIT_MISMATCH


def cmd_lax(args) -> int:
    g = lax_operator(args.r, args.s, q=args.q, track_q=args.q is None)
    _emit(laurent_to_json(g))
    return EXIT_PASS


def cmd_period(args) -> int:
    _check_order(args.order)
    with open(args.poly) as fh:
        g = laurent_from_json(json.load(fh))
    result = period_ct(g, args.nparams, args.order)
    if args.nparams == 1:
        _emit(series_to_json(result))
    else:
        _emit({
            "nparams": args.nparams,
            "trunc": args.order,
            "terms": [{"d": list(d), "c": qstr(c)} for d, c in sorted(result.items())],
        })
    return EXIT_PASS


def cmd_mirror_system(args) -> int:
    degrees = _parse_degrees(args.degrees)
    if args.partition:
        partition = tuple(
            tuple(int(x) for x in block.split(",")) for block in args.partition.split(";")
        )
    else:
        partition, start = [], 1
        for d in degrees:
            partition.append(tuple(range(start, start + d)))
            start += d
        partition = tuple(partition)
    a, b = canonical_gauge_coeffs(args.k, args.n, q=args.q)
    ms = mirror_system(args.k, args.n, degrees, partition, a, b)
    _emit({
        "k": args.k,
        "n": args.n,
        "degrees": list(degrees),
        "partition": [list(J) for J in ms.partition],
        "polys": [laurent_to_json(p) for p in ms.polys],
        "equations": [laurent_to_json(e) for e in ms.equations],
    })
    return EXIT_PASS


def cmd_verify_all(args) -> int:
    _check_order(args.count, "count")
    reg = _registry(args)
    names = sorted(reg)

    def worker(name):
        return run_case(reg[name], count=args.count)

    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        reports = list(pool.map(worker, names))
    merged = {
        "cases": [r.to_json() for r in reports],
        "pass": all(r.passed for r in reports),
    }
    _emit(merged)
    return EXIT_PASS if merged["pass"] else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="grasscy", description=__doc__)
    p.add_argument("--json", action="store_true", help="emit JSON (always on; accepted for compatibility)")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("toric", help="polytope vertices, equations, facets")
    sp.add_argument("k", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("--facets", action="store_true", help="also enumerate facets (small dimensions only)")
    sp.set_defaults(func=cmd_toric)

    sp = sub.add_parser("aseries", help="specialized hypergeometric series")
    sp.add_argument("k", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("--order", type=int, default=20)
    sp.add_argument("--keep-params", action="store_true")
    sp.add_argument("--param-bound", type=int, default=None)
    sp.set_defaults(func=cmd_aseries)

    sp = sub.add_parser("phi", help="factorially modified series")
    sp.add_argument("k", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("--degrees", required=True)
    sp.add_argument("--order", type=int, default=20)
    sp.set_defaults(func=cmd_phi)

    sp = sub.add_parser("pf-fit", help="fit a differential operator to a series file")
    sp.add_argument("--series", required=True)
    sp.add_argument("--max-order", type=int, required=True)
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("--guard", type=int, default=10)
    sp.set_defaults(func=cmd_pf_fit)

    sp = sub.add_parser("qh-operator", help="quantum-cohomology scalar operator")
    sp.add_argument("k", type=int)
    sp.add_argument("n", type=int)
    sp.set_defaults(func=cmd_qh_operator)

    sp = sub.add_parser("verify-conjecture", help="operator annihilates the series")
    sp.add_argument("k", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("--order", type=int, default=20)
    sp.set_defaults(func=cmd_verify_conjecture)

    sp = sub.add_parser("yukawa", help="Yukawa coupling in the z coordinate")
    sp.add_argument("--case", required=True)
    sp.add_argument("--order", type=int, default=12)
    sp.add_argument("--registry", default=None)
    sp.set_defaults(func=cmd_yukawa)

    sp = sub.add_parser("instanton", help="full pipeline for one case")
    sp.add_argument("--case", required=True)
    sp.add_argument("--count", type=int, default=5)
    sp.add_argument("--registry", default=None)
    sp.set_defaults(func=cmd_instanton)

    sp = sub.add_parser("lax", help="Lax Laurent polynomial of G(r,s)")
    sp.add_argument("r", type=int)
    sp.add_argument("s", type=int)
    sp.add_argument("--q", default=None, help="fix q to this rational instead of tracking it")
    sp.set_defaults(func=cmd_lax)

    sp = sub.add_parser("period", help="constant-term period series of a Laurent polynomial file")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--order", type=int, default=12)
    sp.add_argument("--nparams", type=int, default=1)
    sp.set_defaults(func=cmd_period)

    sp = sub.add_parser("mirror-system", help="complete-intersection mirror equations")
    sp.add_argument("k", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("--degrees", required=True)
    sp.add_argument("--partition", default=None, help="blocks like 1;2,3;4,5")
    sp.add_argument("--q", default=1)
    sp.set_defaults(func=cmd_mirror_system)

    sp = sub.add_parser("verify-all", help="run every registry case")
    sp.add_argument("--count", type=int, default=5)
    sp.add_argument("--jobs", type=int, default=None)
    sp.add_argument("--registry", default=None)
    sp.set_defaults(func=cmd_verify_all)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except SystemExit as e:
        if isinstance(e.code, str):
            print(json.dumps({"error": e.code}), file=sys.stderr)
            return EXIT_USAGE
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as e:
        print(json.dumps({"error": f"{type(e).__name__}: {e}"}), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
