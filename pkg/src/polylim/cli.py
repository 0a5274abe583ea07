"""Command-line interface.

Subcommands: coeffs, eval-cot, polygamma, limit, verify.  Output is CSV by
default, JSON with --format json, written to stdout or --output.  Exit
codes: 0 success, 1 computational or verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import cotderiv, limits, verify
from .errors import PolylimError
from .polygamma import polygamma

PRECISION_ENV = "POLYLIM_PRECISION_TERMS"

_FAMILIES = {
    "gamma": limits.FAMILY_GAMMA,
    "polygamma": limits.FAMILY_POLYGAMMA,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polylim",
        description=(
            "Cotangent-derivative expansions, polygamma evaluation, and "
            "exact pole-ratio limits with numerical probes."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_io_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format", choices=("csv", "json"), default="csv", dest="fmt"
        )
        p.add_argument("--output", default=None, help="write here instead of stdout")

    p = sub.add_parser("coeffs", help="expansion tables for orders 1..P")
    p.add_argument("--order", type=int, required=True)
    add_io_flags(p)

    p = sub.add_parser("eval-cot", help="evaluate a cotangent derivative")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--x", type=float, required=True, help="argument in radians")
    add_io_flags(p)

    p = sub.add_parser("polygamma", help="evaluate a polygamma function")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--x", type=float, required=True)
    add_io_flags(p)

    p = sub.add_parser("limit", help="exact pole-ratio limit, optionally probed")
    p.add_argument("--family", choices=sorted(_FAMILIES), required=True)
    p.add_argument("--i", type=int, default=0, help="derivative order")
    p.add_argument("--n", type=int, required=True, help="numerator scale")
    p.add_argument("--q", type=int, required=True, help="denominator scale")
    p.add_argument("--k", type=int, default=0, help="pole index")
    p.add_argument(
        "--probe",
        action="store_true",
        help="sample the ratio near the pole and extrapolate",
    )
    add_io_flags(p)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("--suite", choices=verify.SUITE_NAMES, required=True)
    p.add_argument("--output", default=None, help="write here instead of stdout")

    return parser


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
            if not text.endswith("\n"):
                handle.write("\n")


def _run_coeffs(args) -> int:
    expansions = list(cotderiv.expansions_up_to(args.order))
    if args.fmt == "json":
        text = json.dumps([e.to_json_dict() for e in expansions], indent=2)
    else:
        lines = ["order,sin_exponent,multiplier,coefficient"]
        for e in expansions:
            for j, b in e.harmonics:
                lines.append(f"{e.order},{e.sin_exponent},{j},{b}")
        text = "\n".join(lines)
    _emit(text, args.output)
    return 0


def _run_eval_cot(args) -> int:
    value = cotderiv.eval_cot_deriv(args.order, args.x)
    if args.fmt == "json":
        text = json.dumps(
            {"order": args.order, "x": args.x, "value": value}, indent=2
        )
    else:
        text = f"order,x,value\n{args.order},{args.x!r},{value!r}"
    _emit(text, args.output)
    return 0


def _run_polygamma(args) -> int:
    result = polygamma(args.order, args.x)
    if args.fmt == "json":
        text = json.dumps(result.to_json_dict(), indent=2)
    else:
        text = (
            "order,x,value,method,shift_count\n"
            f"{result.order},{result.argument!r},{result.value!r},"
            f"{result.method},{result.shift_count}"
        )
    _emit(text, args.output)
    return 0


def _run_limit(args) -> int:
    spec = limits.LimitSpec(
        family=_FAMILIES[args.family],
        numerator_scale=args.n,
        denominator_scale=args.q,
        pole_index=args.k,
        derivative_order=args.i,
    )
    if args.probe:
        report = limits.probe_limit(spec)
        if args.fmt == "json":
            text = json.dumps(report.to_json_dict(), indent=2)
        else:
            text = "\n".join(report.to_csv_lines())
    else:
        target = spec.target()
        if args.fmt == "json":
            text = json.dumps(
                {
                    "spec": spec.to_json_dict(),
                    "value": {
                        "numerator": str(target.numerator),
                        "denominator": str(target.denominator),
                    },
                },
                indent=2,
            )
        else:
            text = limits.format_rational(target)
    _emit(text, args.output)
    return 0


def _oracle_terms_from_env() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return verify.DEFAULT_ORACLE_TERMS
    try:
        terms = int(raw)
        if terms < 1:
            raise ValueError
    except ValueError:
        print(
            f"polylim: {PRECISION_ENV} must be a positive integer, got {raw!r}",
            file=sys.stderr,
        )
        raise SystemExit(2) from None
    return terms


def _run_verify(args) -> int:
    results = verify.run_suite(args.suite, oracle_terms=_oracle_terms_from_env())
    lines = [
        f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.detail})" for r in results
    ]
    failed = sum(1 for r in results if not r.passed)
    lines.append(
        f"{len(results) - failed}/{len(results)} checks passed in suite "
        f"'{args.suite}'"
    )
    _emit("\n".join(lines), args.output)
    return 1 if failed else 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    runners = {
        "coeffs": _run_coeffs,
        "eval-cot": _run_eval_cot,
        "polygamma": _run_polygamma,
        "limit": _run_limit,
        "verify": _run_verify,
    }
    try:
        return runners[args.subcommand](args)
    except PolylimError as exc:
        print(f"polylim: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
