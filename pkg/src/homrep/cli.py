"""Command-line front end: ``homrep eval|coeffs|crosscheck|bench``.

Exit codes: 0 success, 2 invalid input, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import asdict

from .bench import run_bench
from .coeffs import coefficient_table
from .crosscheck import GridBounds, run_crosscheck
from .errors import InvalidInputError
from .expansions import (
    hom_rep_bialternant,
    hom_rep_expansion_A,
    hom_rep_expansion_B,
    schur_rep_bialternant,
    schur_rep_oracle,
)
from .homcore import hom_rep_combinatorial
from .numeric import APPROX, DEFAULTS, EXACT, close, format_scalar, parse_scalar
from .vandermonde import inverse_last_column

EXIT_OK, EXIT_INVALID, EXIT_VERIFY = 0, 2, 3

HOM_ROUTES = {
    "combinatorial": hom_rep_combinatorial,
    "bialternant": hom_rep_bialternant,
    "expansionA": hom_rep_expansion_A,
    "expansionB": hom_rep_expansion_B,
}
SCHUR_ROUTES = {
    "bialternant": lambda lam, y, kappa: schur_rep_bialternant(lam, y, kappa),
    "jacobi_trudi": lambda lam, y, kappa: schur_rep_oracle(lam, y, kappa),
}


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise InvalidInputError(f"expected comma-separated integers, got {text!r}") from None


def parse_m_range(text: str) -> list[int]:
    """``"5"`` or the inclusive range ``"a..b"``."""
    try:
        if ".." in text:
            a, b = (int(p) for p in text.split(".."))
        else:
            a = b = int(text)
    except ValueError:
        raise InvalidInputError(f"bad m or m-range {text!r}") from None
    if a < 0 or b < a:
        raise InvalidInputError(f"m-range {text!r} is empty or negative")
    return list(range(a, b + 1))


def _points(args):
    return [parse_scalar(p, args.mode) for p in args.y.split(",")]


def _emit(args, report: dict, plain_lines: list[str]):
    if args.format == "json":
        print(json.dumps(report, indent=2))
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["method", "m", "value"])
        for r in report["results"]:
            w.writerow([r["method"], r.get("m"), r["value"]])
    else:
        print("\n".join(plain_lines))


def cmd_eval(args) -> int:
    y = _points(args)
    kappa = parse_int_list(args.kappa)
    ms = parse_m_range(args.m)
    lam = parse_int_list(args.lam) if args.lam else None
    routes = SCHUR_ROUTES if lam is not None else HOM_ROUTES
    methods = list(routes) if args.method == "all" else [args.method]
    if any(meth not in routes for meth in methods):
        raise InvalidInputError(f"method {args.method!r} not available here")

    results = []
    agree = True
    for m in ms:
        vals = []
        for meth in methods:
            v = routes[meth](lam, y, kappa) if lam is not None else routes[meth](y, kappa, m)
            vals.append(v)
            results.append({"method": meth, "m": None if lam is not None else m,
                            "value": format_scalar(v)})
        agree &= all(close(vals[0], v, args.tol) for v in vals[1:])
        if lam is not None:
            break
    verdict = ("agree" if agree else "disagree") if len(methods) > 1 else "ok"
    report = {
        "command": "eval",
        "input": {"y": [format_scalar(v) for v in y], "kappa": kappa, "m": args.m,
                  "lambda": lam, "mode": args.mode, "method": args.method},
        "results": results,
        "verdict": verdict,
        "seed": args.seed,
    }
    if len(results) == 1:
        plain = [results[0]["value"]]
    else:
        plain = [f"{r['method']}\tm={r['m']}\t{r['value']}" for r in results] + [f"verdict\t{verdict}"]
    _emit(args, report, plain)
    return EXIT_VERIFY if verdict == "disagree" and args.mode == EXACT else EXIT_OK


def cmd_coeffs(args) -> int:
    y = _points(args)
    kappa = parse_int_list(args.kappa)
    table = coefficient_table(y, kappa, args.family)
    results = [{"method": args.family, "m": None, "s": s, "r": r, "value": format_scalar(v)}
               for (s, r), v in table.items()]
    plain = [f"({s},{r})\t{format_scalar(v)}" for (s, r), v in table.items()]
    verdict = "ok"
    if args.family == "B":
        col = inverse_last_column(y, kappa)
        results += [{"method": "inverse_last_column", "m": None, "k": k, "value": format_scalar(v)}
                    for k, v in enumerate(col, start=1)]
        plain += [f"inverse_last_column[{k}]\t{format_scalar(v)}" for k, v in enumerate(col, 1)]
        verdict = "agree" if all(close(a, b, args.tol) for a, b in zip(col, table.values.values())) \
            else "disagree"
    report = {
        "command": "coeffs",
        "input": {"y": [format_scalar(v) for v in y], "kappa": kappa, "family": args.family,
                  "mode": args.mode},
        "results": results,
        "verdict": verdict,
        "seed": args.seed,
    }
    _emit(args, report, plain)
    return EXIT_VERIFY if verdict == "disagree" else EXIT_OK


def cmd_crosscheck(args) -> int:
    bounds = GridBounds(args.max_n, args.max_N, args.max_m)
    rep = run_crosscheck(bounds, args.seed, args.jobs, args.inject_fault)
    verdict = "pass" if rep.ok else "fail"
    report = {
        "command": "crosscheck",
        "input": asdict(bounds),
        "results": [{"method": "all", "m": None, "cases": rep.cases,
                     "passed": rep.passed, "failed": rep.failed, "value": verdict}],
        "verdict": verdict,
        "seed": args.seed,
    }
    if args.format == "json":
        report["failures"] = rep.failures
        print(json.dumps(report, indent=2))
    else:
        print(f"cases={rep.cases} passed={rep.passed} failed={rep.failed} verdict={verdict}")
    if not rep.ok:
        print("minimal reproducer: " + json.dumps(rep.failures[0]), file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.mode != APPROX:
        raise InvalidInputError("bench runs in approx mode only")
    ms = [int(float(p)) for p in args.m.split(",")]
    rows = run_bench(args.N, ms, n=args.blocks, seed=args.seed, sweep=args.sweep,
                     log=lambda msg: print(msg, file=sys.stderr))
    if args.format == "json":
        print(json.dumps({"command": "bench", "input": {"N": args.N, "m": ms},
                          "results": [asdict(r) for r in rows], "verdict": "ok",
                          "seed": args.seed}, indent=2))
    else:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["N", "m", "method", "nanos"])
        for r in rows:
            w.writerow([r.N, r.m, r.method, r.nanos])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="homrep", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt="plain"):
        sp.add_argument("--mode", choices=[EXACT, APPROX], default=EXACT)
        sp.add_argument("--format", choices=["json", "csv", "plain"], default=fmt)
        sp.add_argument("--tol", type=float, default=DEFAULTS.rtol,
                        help="relative tolerance for approx comparisons")
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("eval", help="evaluate h_m(y^[kappa]) or s_lambda(y^[kappa])")
    sp.add_argument("--y", required=True, help="comma-separated points, e.g. 1/2,3")
    sp.add_argument("--kappa", required=True)
    sp.add_argument("--m", default="0", help="degree or inclusive range a..b")
    sp.add_argument("--lambda", dest="lam", default=None, help="partition; evaluates Schur")
    sp.add_argument("--method", default="all",
                    choices=[*HOM_ROUTES, "jacobi_trudi", "all"])
    common(sp)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("coeffs", help="A or B partial-fraction coefficient table")
    sp.add_argument("--family", choices=["A", "B"], default="B")
    sp.add_argument("--y", required=True)
    sp.add_argument("--kappa", required=True)
    common(sp)
    sp.set_defaults(func=cmd_coeffs)

    sp = sub.add_parser("crosscheck", help="exact agreement sweep over a grid")
    sp.add_argument("--max-n", dest="max_n", type=int, default=4)
    sp.add_argument("--max-N", dest="max_N", type=int, default=7)
    sp.add_argument("--max-m", dest="max_m", type=int, default=8)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--inject-fault", action="store_true",
                    help="corrupt one value to exercise the failure path")
    common(sp)
    sp.set_defaults(func=cmd_crosscheck)

    sp = sub.add_parser("bench", help="time the determinant and table routes")
    sp.add_argument("--N", type=int, default=12)
    sp.add_argument("--m", default="1000,1000000,1000000000", help="comma-separated degrees")
    sp.add_argument("--blocks", type=int, default=4)
    sp.add_argument("--sweep", type=int, default=1000)
    common(sp, fmt="csv")
    sp.set_defaults(mode=APPROX)
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
