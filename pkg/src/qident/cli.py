"""Command-line driver: ``qident list | eval | verify | limit | selftest``.

Parameters are given as repeated ``--param name=value`` with rational
literals only.  Exit codes: 0 when everything passed, 1 on any failed or
errored check, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import families as fam
from .identities import list_identities
from .limits import DEFAULT_PRECISION, DEFAULT_STEPS, LIMIT_IDS, limit_check
from .numerics import format_rational, parse_rational
from .properties import run_properties
from .verify import DEFAULT_ORDER, DEFAULT_SEED, DEFAULT_TRIALS, REGISTRY, Summary, verify_all, verify_identity

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _param(text: str) -> tuple[str, Fraction]:
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"expected name=value, got {text!r}")
    try:
        return name.strip(), parse_rational(value.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _binding(pairs) -> dict[str, Fraction]:
    out: dict[str, Fraction] = {}
    for name, value in pairs or ():
        if name in out:
            raise UsageError(f"parameter {name!r} given twice")
        out[name] = value
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qident", description="Exact verification of q-polynomial identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, order=True):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--param", action="append", type=_param, default=[], metavar="NAME=VALUE")
        if order:
            p.add_argument("--order", type=int, default=DEFAULT_ORDER)

    p = sub.add_parser("list", help="list the identity registry")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("eval", help="evaluate one family value")
    common(p, order=False)
    p.add_argument("--family", required=True, choices=[f.value for f in fam.FamilyId])
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify", help="verify identities exactly")
    common(p)
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--id")
    target.add_argument("--all", action="store_true")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--mode", choices=("free", "consistent", "both"), default="both")

    p = sub.add_parser("limit", help="numeric q -> 1 limit check")
    common(p, order=False)
    p.add_argument("--id", required=True, choices=LIMIT_IDS)
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p.add_argument("--steps", type=int, default=DEFAULT_STEPS)

    p = sub.add_parser("selftest", help="full verification run plus every property suite")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    return parser


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _table(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _show_binding(binding) -> str:
    return " ".join(f"{k}={v}" for k, v in binding.items())


# -- commands ------------------------------------------------------------------------

def cmd_list(args) -> int:
    entries = list_identities()
    if args.format == "json":
        _emit([{"id": i, "description": d, "schema": s} for i, d, s in entries])
    else:
        rows = [["ID", "DESCRIPTION", "PARAMETERS"]]
        rows += [[i, d, "; ".join(s.values())] for i, d, s in entries]
        print(_table(rows))
    return EXIT_OK


def cmd_eval(args) -> int:
    binding = _binding(args.param)
    family = fam.FamilyId(args.family)
    try:
        value = fam.family_value(family, args.n, binding)
        base = fam.base_from_binding(binding) if family.is_q else None
    except (fam.SchemaError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        out = {"family": family.value, "n": args.n,
               "binding": {k: format_rational(v) for k, v in binding.items()}}
        if base is not None:
            out["q"] = format_rational(base.q)
        out["value"] = format_rational(value)
        _emit(out)
    else:
        header = f"{family.value} n={args.n} {_show_binding(binding)}"
        if base is not None:
            header += f" (q = {base.q})"
        print(header)
        print(value)
    return EXIT_OK


def _print_reports(summary: Summary) -> None:
    rows = [["ID", "MODE", "STATUS", "BINDING", "DETAIL"]]
    for r in summary.reports:
        detail = ""
        if r.first_mismatch is not None:
            k, lhs, rhs = r.first_mismatch
            detail = f"t^{k}: lhs {lhs} != rhs {rhs}"
        elif r.message:
            detail = r.message
        rows.append([r.id, r.mode, r.status, _show_binding(r.binding), detail])
    print(_table(rows))
    print(f"total {summary.total}  passed {summary.passed}  failed {summary.failed}  errors {summary.errors}")


def cmd_verify(args) -> int:
    if args.order < 0 or args.trials < 1:
        raise UsageError("--order must be >= 0 and --trials >= 1")
    binding = _binding(args.param)
    if args.id is not None and args.id not in REGISTRY:
        raise UsageError(f"unknown identity {args.id!r}")
    if args.all and binding:
        raise UsageError("--param cannot be combined with --all")
    if args.id is not None and binding:
        summary = Summary([verify_identity(args.id, binding, args.order)])
    else:
        ids = None if args.all else [args.id]
        summary = verify_all(args.seed, args.trials, args.order, args.mode, ids)
    if args.format == "json":
        _emit(summary.reports[0].to_json() if args.id and binding else summary.to_json())
    else:
        _print_reports(summary)
    return EXIT_OK if summary.ok else EXIT_FAIL


def cmd_limit(args) -> int:
    binding = _binding(args.param)
    try:
        report = limit_check(args.id, binding or None, args.precision, args.steps)
    except (fam.SchemaError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        _emit(report.to_json())
    else:
        import mpmath
        print(f"{report.id} {_show_binding(report.point)} precision={report.precision} bits")
        rows = [["K", "Q", "ERROR"]]
        rows += [[str(k), mpmath.nstr(q, 12), mpmath.nstr(e, 6)] for k, (q, e) in enumerate(report.steps, 1)]
        print(_table(rows))
        rate = "n/a" if report.rate is None else f"{report.rate:.4f}"
        print(f"target {mpmath.nstr(report.target, 12)}  rate {rate}  status {report.status}")
    return EXIT_OK if report.status == "pass" else EXIT_FAIL


def cmd_selftest(args) -> int:
    summary = verify_all(args.seed, args.trials, args.order, "both")
    props = run_properties()
    limits = [limit_check(i) for i in LIMIT_IDS]
    ok = summary.ok and all(p.passed for p in props) and all(r.status == "pass" for r in limits)
    if args.format == "json":
        _emit({
            "ok": ok,
            "properties": [{"module": p.module, "name": p.name, "passed": p.passed,
                            "checks": p.checks, "detail": p.detail} for p in props],
            "limits": [r.to_json() for r in limits],
            "verify": summary.to_json(),
        })
    else:
        rows = [["IDENTITY", "PASSED"]]
        rows += [[i, f"{a}/{b}"] for i, (a, b) in summary.per_identity().items()]
        print(_table(rows))
        print(f"verify: {summary.passed}/{summary.total} passed")
        print()
        rows = [["MODULE", "PROPERTY", "CHECKS", "STATUS"]]
        rows += [[p.module, p.name, str(p.checks), ("pass" if p.passed else f"FAIL {p.detail}")] for p in props]
        print(_table(rows))
        print()
        rows = [["LIMIT", "RATE", "STATUS"]]
        rows += [[r.id, "n/a" if r.rate is None else f"{r.rate:.3f}", r.status] for r in limits]
        print(_table(rows))
        print()
        print("selftest: " + ("pass" if ok else "FAIL"))
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {"list": cmd_list, "eval": cmd_eval, "verify": cmd_verify, "limit": cmd_limit, "selftest": cmd_selftest}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"qident: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
