"""Command-line front end.

    rpbell stirling --kind rp --n 4 --k 2 --r 2,2
    rpbell bell --n 0 --r 2,2 [--tilde] [--at 1/2]
    rpbell verify --suite t6 --max-n 4 --max-m 4 --max-r 4 [--format json]
    rpbell analyze --what roots --n 0 --r 2,2

Exit status: 0 success / all checks passed, 1 a verification failed,
2 usage or domain error.  JSON output renders every integer and rational
as a string and sorts keys, so it re-serializes byte-identically.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict
from fractions import Fraction
from typing import Any, Sequence

from .analysis import (
    certify_real_negative_roots,
    check_newton_inequality,
    check_strong_log_concavity,
    max_index_report,
)
from .bell import bell_poly, bell_tilde
from .exact_arith import format_rational, parse_rational
from .identities import SUITES, GridConfig, run_suite
from .report import format_params
from .rp_stirling import RestrictionVector, rp_stirling2
from .stirling_core import (
    r_stirling1_unsigned,
    r_stirling2,
    stirling1_unsigned,
    stirling2,
)


class UsageError(Exception):
    pass


def _jsonable(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, RestrictionVector):
        return [str(x) for x in value.parts]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def envelope(command: str, params: dict, result: Any, status: str) -> dict:
    return {
        "command": command,
        "params": _jsonable(params),
        "result": _jsonable(result),
        "status": status,
    }


def dump_envelope(env: dict) -> str:
    return json.dumps(env, sort_keys=True, indent=2)


def _restriction(text: str) -> RestrictionVector:
    try:
        return RestrictionVector.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad restriction vector {text!r}: {exc}") from None


def _scalar_r(text: str | None) -> int:
    if text is None:
        raise UsageError("--r is required for this kind")
    try:
        r = int(text)
    except ValueError:
        raise UsageError(f"--r must be a single integer for this kind, got {text!r}") from None
    if r < 0:
        raise UsageError("--r must be nonnegative")
    return r


def cmd_stirling(args) -> tuple[dict, str]:
    if args.n < 0 or args.k < 0:
        raise UsageError("--n and --k must be nonnegative")
    params: dict = {"kind": args.kind, "n": args.n, "k": args.k}
    try:
        if args.kind == "s2":
            value = stirling2(args.n, args.k)
        elif args.kind == "s1u":
            value = stirling1_unsigned(args.n, args.k)
        elif args.kind in ("s2r", "s1r"):
            r = _scalar_r(args.r)
            params["r"] = r
            fn = r_stirling2 if args.kind == "s2r" else r_stirling1_unsigned
            value = fn(args.n, args.k, r)
        else:
            if args.r is None:
                raise UsageError("--r is required for kind rp")
            r = _restriction(args.r)
            params["r"] = r
            value = rp_stirling2(args.n, args.k, r)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return envelope("stirling", params, value, "value"), str(value)


def cmd_bell(args) -> tuple[dict, str]:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    r = _restriction(args.r)
    params: dict = {"n": args.n, "r": r, "tilde": args.tilde}
    b = bell_tilde(args.n, r) if args.tilde else bell_poly(args.n, r)
    if args.at is not None:
        try:
            z = parse_rational(args.at)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--at expects p/q, got {args.at!r}") from None
        params["at"] = z
        value = Fraction(b(z))
        return envelope("bell", params, value, "value"), format_rational(value)
    coeffs = list(b.coeffs)
    return envelope("bell", params, coeffs, "value"), str(coeffs)


def cmd_verify(args) -> tuple[dict, str]:
    for flag in ("max_n", "max_m", "max_r"):
        if getattr(args, flag) < 0:
            raise UsageError(f"--{flag.replace('_', '-')} must be nonnegative")
    cfg = GridConfig(max_n=args.max_n, max_m=args.max_m, max_r=args.max_r, order=args.order)
    try:
        reports = run_suite(args.suite, cfg)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    failed = [r for r in reports if not r.passed]
    status = "fail" if failed else "pass"
    params = {
        "suite": args.suite,
        "max_n": args.max_n,
        "max_m": args.max_m,
        "max_r": args.max_r,
        "order": args.order,
    }
    result = {
        "total": len(reports),
        "failed": len(failed),
        "reports": [r.to_dict() for r in reports],
    }
    env = envelope("verify", params, result, status)

    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["identity_id", "params", "passed", "discrepancy_location"])
        for rep in reports:
            loc = rep.first_discrepancy.location if rep.first_discrepancy else ""
            w.writerow([rep.identity_id.value, format_params(rep.params), rep.passed, loc])
        return env, buf.getvalue().rstrip("\n")

    lines = []
    for rep in reports:
        line = f"{'PASS' if rep.passed else 'FAIL'} {rep.identity_id.value} {format_params(rep.params)}"
        if rep.first_discrepancy:
            d = rep.first_discrepancy
            line += f" at {d.location}: lhs={format_rational(d.lhs)} rhs={format_rational(d.rhs)}"
        lines.append(line)
    lines.append(f"{len(reports) - len(failed)}/{len(reports)} passed")
    return env, "\n".join(lines)


def cmd_analyze(args) -> tuple[dict, str]:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    r = _restriction(args.r)
    params = {"what": args.what, "n": args.n, "r": r}
    row = bell_poly(args.n, r).coeffs
    if args.what == "roots":
        cert = certify_real_negative_roots(bell_poly(args.n, r).poly)
        result: Any = asdict(cert)
        text = f"all_real_negative: {str(cert.all_real_negative).lower()}"
    elif args.what == "logconcave":
        newton = check_newton_inequality(row) if len(row) >= 3 else True
        result = {
            "coefficients": list(row),
            "strongly_log_concave": check_strong_log_concavity(row),
            "newton": newton,
        }
        text = str(result["strongly_log_concave"] and newton).lower()
    else:
        rep = max_index_report(args.n, r)
        result = {
            "K": rep.K,
            "darroch_center": rep.darroch_center,
            "within_one": rep.within_one,
            "boundary": rep.boundary,
        }
        text = f"K={rep.K} center={format_rational(rep.darroch_center)} within_one={str(rep.within_one).lower()}"
    return envelope("analyze", params, result, "value"), text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rpbell", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stirling", help="one Stirling number")
    p.add_argument("--kind", choices=["s2", "s1u", "s2r", "s1r", "rp"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", default=None, help="integer, or comma list for --kind rp")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_stirling)

    p = sub.add_parser("bell", help="Bell polynomial coefficients or value")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--tilde", action="store_true")
    p.add_argument("--at", default=None, help="evaluate at a rational p/q")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], required=True)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-m", type=int, default=4)
    p.add_argument("--max-r", type=int, default=3)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", help="root, log-concavity and modal-index certificates")
    p.add_argument("--what", choices=["roots", "logconcave", "maxindex"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.set_defaults(func=cmd_analyze)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        env, text = args.func(args)
    except UsageError as exc:
        print(f"rpbell: error: {exc}", file=sys.stderr)
        return 2
    print(dump_envelope(env) if args.format == "json" else text)
    return 1 if env["status"] == "fail" else 0


if __name__ == "__main__":
    sys.exit(main())
