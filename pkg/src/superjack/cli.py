"""Command-line front end: ``superjack <command> [flags]``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cms, deformed, ideals, shifted
from .errors import PoleAtTheta, SuperJackError
from .partitions import parse_partition
from .polys import MultiPoly
from .ratfun import RatFun
from .symfunc import BASES, SymFn, expand_in_variables
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _partition(text: str):
    try:
        return parse_partition(text)
    except SuperJackError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _theta(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad theta value {text!r}") from exc


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if v < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer")
    return v


# ---------------------------------------------------------------------------
# output

def _specialize(obj, theta):
    if theta is None:
        return obj

    def at(c):
        return RatFun.constant(c.evaluate(theta))

    if isinstance(obj, (MultiPoly, SymFn)):
        return obj.map_coeffs(at)
    if isinstance(obj, dict):
        return {k: at(v) for k, v in obj.items()}
    return at(obj)


def _coeff_map_text(d: dict) -> str:
    if not d:
        return "{}"
    body = ", ".join(f"({','.join(map(str, k))}): {v.to_str()}" for k, v in d.items())
    return "{" + body + "}"


def _emit(obj, args, note: str | None = None):
    obj = _specialize(obj, args.theta)
    if args.format == "json":
        if isinstance(obj, dict):
            payload = {"coefficients": [{"partition": list(k), "coeff": v.to_json()} for k, v in obj.items()]}
        else:
            payload = obj.to_json()
        if note:
            payload["note"] = note
        print(json.dumps(payload, sort_keys=True))
    else:
        print(_coeff_map_text(obj) if isinstance(obj, dict) else obj.to_str())
        if note:
            print(f"# {note}")


def _sorted_coeffs(d: dict) -> dict:
    return {k: d[k] for k in sorted(d, key=lambda l: (-sum(l), tuple(-x for x in l)))}


# ---------------------------------------------------------------------------
# commands

def cmd_jack(args):
    P = cms.jack(args.lam)
    if args.vars is not None:
        return _emit(expand_in_variables(P, args.vars), args)
    _emit(P.in_basis(args.basis), args)


def cmd_shifted_jack(args):
    N = args.vars if args.vars is not None else max(len(args.lam), 1)
    _emit(shifted.shifted_jack(args.lam, N, args.method), args)


def cmd_superjack(args):
    p = deformed.super_jack(args.lam, args.n, args.m, args.method)
    note = None
    if not p:
        note = f"{list(args.lam)} lies outside the fat ({args.n},{args.m})-hook, so its image vanishes"
    _emit(p, args, note)


def cmd_shifted_superjack(args):
    _emit(deformed.shifted_super_jack(args.lam, args.n, args.m, args.convention), args)


def cmd_newton(args):
    _emit(deformed.deformed_newton(args.r, args.n, args.m), args)


def cmd_pieri(args):
    d = sum(args.lam) + args.r
    _emit(_sorted_coeffs(cms.pieri_expand_e(args.lam, args.r, d)), args)


def cmd_expand(args):
    f = SymFn.unit(args.basis, args.lam)
    _emit(_sorted_coeffs(cms.jack_expand(f)), args)


def cmd_project(args):
    omega = ideals.Filter(tuple(args.filter))
    f = SymFn.unit(args.basis, args.lam)
    _emit(ideals.ideal_project(f, omega), args)


def cmd_verify(args):
    results = run_suite(args.suite, args.max_weight, args.n, args.m)
    ok = all(r.passed for r in results)
    for r in results:
        if args.format == "json":
            print(json.dumps(r.to_json(), sort_keys=True))
        elif r.passed:
            print(f"{r.name}: PASS, {r.checked} cases checked")
        else:
            print(f"{r.name}: FAIL after {r.checked} cases")
            print(json.dumps(r.counterexample, sort_keys=True))
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superjack", description="Jack, shifted Jack and super-Jack polynomials over Q(theta).")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--theta", type=_theta, default=None, help="specialize theta to a rational p/q")

    lam = argparse.ArgumentParser(add_help=False)
    lam.add_argument("--lambda", dest="lam", type=_partition, required=True, help="partition as a,b,c")

    nm = argparse.ArgumentParser(add_help=False)
    nm.add_argument("--n", type=_nonneg, default=1)
    nm.add_argument("--m", type=_nonneg, default=1)

    p = sub.add_parser("jack", parents=[common, lam], help="Jack polynomial P_lambda")
    p.add_argument("--basis", choices=BASES, default="m")
    p.add_argument("--vars", type=_nonneg, default=None, help="expand in this many variables")
    p.set_defaults(func=cmd_jack)

    p = sub.add_parser("shifted-jack", parents=[common, lam], help="shifted Jack polynomial")
    p.add_argument("--vars", type=_nonneg, default=None)
    p.add_argument("--method", choices=("branching", "tableau", "vanishing"), default="branching")
    p.set_defaults(func=cmd_shifted_jack)

    p = sub.add_parser("superjack", parents=[common, lam, nm], help="super-Jack polynomial SP_lambda")
    p.add_argument("--method", choices=("skew_expansion", "bitableau", "via_phi"), default="skew_expansion")
    p.set_defaults(func=cmd_superjack)

    p = sub.add_parser("shifted-superjack", parents=[common, lam, nm], help="shifted super-Jack polynomial")
    p.add_argument("--convention", choices=("flat", "natural"), default="flat")
    p.set_defaults(func=cmd_shifted_superjack)

    p = sub.add_parser("newton", parents=[common, nm], help="deformed Newton sum")
    p.add_argument("--r", type=_nonneg, required=True)
    p.set_defaults(func=cmd_newton)

    p = sub.add_parser("pieri", parents=[common, lam], help="Jack expansion of P_lambda * e_r")
    p.add_argument("--r", type=_nonneg, required=True)
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("expand", parents=[common, lam], help="Jack expansion of a basis element")
    p.add_argument("--basis", choices=BASES, default="p")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("project", parents=[common, lam], help="project a basis element onto a filter ideal")
    p.add_argument("--basis", choices=BASES, default="p")
    p.add_argument("--filter", type=_partition, nargs="*", default=[], help="generators, e.g. --filter 2 1,1")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("verify", parents=[common, nm], help="run a verification sweep")
    p.add_argument("suite", choices=tuple(SUITES) + ("all",))
    p.add_argument("--max-weight", type=_nonneg, default=4)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        code = args.func(args)
    except PoleAtTheta as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SuperJackError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
