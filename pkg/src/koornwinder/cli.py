"""Command-line front end.

Exit status: 0 when every requested check passes, 1 when one fails, 2 for
usage or parameter-file errors and 3 when the parameters are not generic
enough (spectral collisions, poles).
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import closedforms as cf
from . import torusquad as tq
from .params import DEFAULT, ParameterError, ParamSet
from .polynomials import compute_antisym, compute_ns, compute_sym, normalize_E, normalize_Eplus
from .rootsys import is_dominant, is_regular_dominant
from .spectrum import GenericityError, inverse_point, x0
from .suites import SUITES, Config, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GENERICITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _weight(text: str, n: int) -> tuple[int, ...]:
    try:
        lam = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"--lambda expects comma-separated integers, got {text!r}") from None
    if len(lam) != n:
        raise UsageError(f"--lambda has {len(lam)} entries but --n is {n}")
    return lam


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2, help="rank (at least 2)")
    common.add_argument("--params", help="JSON parameter file with rational strings qh, t0, t0v, t, tn, tnv")
    common.add_argument("--lambda", dest="lam", help="weight as comma-separated integers")
    common.add_argument("--N", type=int, help="quadrature points per circle (default: chosen from the pole moduli)")
    common.add_argument("--M", type=int, default=40, help="factors kept in each infinite product")
    common.add_argument("--box", type=int, default=2, help="largest component sum of |lambda| in exact suites")
    common.add_argument("--quad-box", type=int, default=1, help="largest component sum of |lambda| in quadrature suites")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=20, help="random polynomials per relation")
    common.add_argument("--tol-abs", type=float, default=1e-8)
    common.add_argument("--tol-rel", type=float, default=1e-6)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", default="json")
    fmt.add_argument("--table", dest="fmt", action="store_const", const="table")

    parser = argparse.ArgumentParser(prog="koornwinder", description="Koornwinder polynomials and their identities")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("compute-ns", parents=[common], help="non-symmetric polynomial P_lambda")
    sub.add_parser("compute-sym", parents=[common], help="symmetric polynomial P+_lambda (lambda dominant)")
    sub.add_parser("compute-anti", parents=[common], help="anti-symmetric polynomial (lambda regular dominant)")
    norm = sub.add_parser("normalize", parents=[common], help="polynomial normalised to 1 at the base point")
    norm.add_argument("--symmetric", action="store_true")
    sub.add_parser("eval", parents=[common], help="solver and closed-form values at the base point")
    sub.add_parser("norms", parents=[common], help="closed-form quadratic norm ratios")
    sub.add_parser("constant-term", parents=[common], help="constant term by quadrature and by product formula")
    verify = sub.add_parser("verify", parents=[common], help="run verification suites")
    verify.add_argument("suite", nargs="?", help="suite name or 'all'")
    verify.add_argument("--list", action="store_true", help="list suites and the identity each one checks")
    return parser


def _config(args) -> Config:
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    params = ParamSet.load(args.params) if args.params else DEFAULT
    if args.N:
        grid = tq.GridSpec(args.N, args.M)
    else:
        grid = tq.auto_grid(params, M=args.M) if _quadrature_ok(params) else None
    return Config(n=args.n, params=params, box=args.box, seed=args.seed, trials=args.trials,
                  tol_abs=args.tol_abs, tol_rel=args.tol_rel, grid=grid, quad_box=args.quad_box)


def _quadrature_ok(p: ParamSet) -> bool:
    try:
        p.check_quadrature()
    except ParameterError:
        return False
    return True


def _need_lambda(args) -> tuple[int, ...]:
    if not args.lam:
        raise UsageError(f"{args.command} needs --lambda")
    return _weight(args.lam, args.n)


def _run(args) -> tuple[dict, int]:
    cfg = _config(args)
    p, n = cfg.params, cfg.n
    cmd = args.command
    if cmd == "compute-ns":
        return compute_ns(_need_lambda(args), p).to_json_obj(), EXIT_OK
    if cmd == "compute-sym":
        lam = _need_lambda(args)
        if not is_dominant(lam):
            raise UsageError(f"{lam} is not dominant")
        return compute_sym(lam, p).to_json_obj(), EXIT_OK
    if cmd == "compute-anti":
        lam = _need_lambda(args)
        if not is_regular_dominant(lam):
            raise UsageError(f"{lam} is not regular dominant")
        return compute_antisym(lam, p).to_json_obj(), EXIT_OK
    if cmd == "normalize":
        lam = _need_lambda(args)
        if args.symmetric:
            if not is_dominant(lam):
                raise UsageError(f"{lam} is not dominant")
            return normalize_Eplus(lam, p).to_json_obj(), EXIT_OK
        return normalize_E(lam, p).to_json_obj(), EXIT_OK
    if cmd == "eval":
        lam = _need_lambda(args)
        solver = compute_ns(lam, p).poly.eval_at(inverse_point(x0(p, n)))
        formula = cf.eval_formula_ns(lam, p)
        report = {"lambda": list(lam), "nonsymmetric": {"solver": str(solver), "formula": str(formula)}}
        ok = solver == formula
        if is_dominant(lam):
            sym = compute_sym(lam, p).poly.eval_at(x0(p, n))
            roots, poch = cf.eval_sym_roots(lam, p), cf.eval_sym_pochhammer(lam, p)
            report["symmetric"] = {"solver": str(sym), "root_product": str(roots), "pochhammer": str(poch)}
            ok = ok and sym == roots == poch
        report["match"] = report["pass"] = ok
        return report, EXIT_OK if ok else EXIT_FAIL
    if cmd == "norms":
        lam = _need_lambda(args)
        report = {"lambda": list(lam), "nonsymmetric_ratio": str(cf.norm_ratio_ns(lam, p))}
        if is_dominant(lam):
            report["symmetric_ratio"] = str(cf.norm_ratio_sym(lam, p))
        return report, EXIT_OK
    if cmd == "constant-term":
        check = tq.constant_term_check(p, n, cfg.quad_grid(), tol_rel=cfg.tol_abs)
        return {"checks": [check.to_json_obj()], "pass": check.passed}, EXIT_OK if check.passed else EXIT_FAIL
    if cmd == "verify":
        return _verify(args, cfg)
    raise UsageError(f"unknown command {cmd}")


def _verify(args, cfg: Config) -> tuple[dict, int]:
    if args.list:
        return {"suites": [{"name": s.name, "numeric": s.numeric, "checks": s.identity} for s in SUITES.values()]}, EXIT_OK
    if not args.suite:
        raise UsageError("verify needs a suite name, 'all' or --list")
    if args.suite == "all":
        names = list(SUITES)
    elif args.suite in SUITES:
        names = [args.suite]
    else:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)} or all")
    report = {"params": cfg.params.to_json_obj(), "n": cfg.n, "suites": []}
    ok = True
    for name in names:
        suite = SUITES[name]
        entry = {"suite": name, "checks": suite.identity}
        if suite.numeric and not _quadrature_ok(cfg.params):
            entry.update(skipped=True, reason="parameters outside the quadrature regime")
            report["suites"].append(entry)
            continue
        start = time.perf_counter()
        checks = run_suite(name, cfg)
        passed = all(c.passed for c in checks)
        ok = ok and passed
        entry.update(
            {"pass": passed, "seconds": round(time.perf_counter() - start, 3), "results": [c.to_json_obj() for c in checks]}
        )
        if suite.numeric:
            entry["grid"] = {"N": cfg.quad_grid().N, "M": cfg.quad_grid().M}
        report["suites"].append(entry)
    report["pass"] = ok
    return report, EXIT_OK if ok else EXIT_FAIL


def _table(report: dict) -> str:
    if "suites" in report and "pass" in report:
        lines = []
        for entry in report["suites"]:
            if entry.get("skipped"):
                lines.append(f"{entry['suite']:<20} SKIP  {entry['reason']}")
                continue
            status = "PASS" if entry["pass"] else "FAIL"
            lines.append(f"{entry['suite']:<20} {status}  {len(entry['results'])} checks, {entry['seconds']} s")
            for r in entry["results"]:
                if not r["pass"]:
                    detail = {k: v for k, v in r.items() if k not in ("check", "pass")}
                    lines.append(f"    FAIL {r['check']}: {json.dumps(detail)}")
        return "\n".join(lines)
    if "suites" in report:
        return "\n".join(f"{s['name']:<20} {s['checks']}" for s in report["suites"])
    return "\n".join(f"{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}" for k, v in report.items())


def main(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        report, code = _run(args)
    except (UsageError, ParameterError, ValueError) as exc:
        report, code = {"error": "usage", "message": str(exc)}, EXIT_USAGE
    except GenericityError as exc:
        report, code = {"error": "genericity", "message": str(exc)}, EXIT_GENERICITY
    if args.fmt == "table":
        print(_table(report))
    else:
        print(json.dumps(report, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
