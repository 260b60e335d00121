"""Command-line entry point.

Every subcommand writes canonical JSON (sorted keys, rationals as "p/q"
strings) on stdout.  Exit status: 0 on success, 1 when a certification
is refuted, 2 on bad arguments or unusable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import certify as cert
from . import cfrac, oracle, transforms
from .demos import format_table, run_demos
from .series import rat, rat_str

EXIT_OK, EXIT_REFUTED, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def rational(text: str) -> Fraction:
    try:
        return rat(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")


def positive_rational(text: str) -> Fraction:
    x = rational(text)
    if x <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return x


def nonnegative_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text!r}")
    return n


def rational_list(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    return tuple(rational(part) for part in text.split(","))


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")


def _load_json(path: str):
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}")


def parse_moments_text(text: str, fmt: str) -> cfrac.MomentSequence:
    if fmt == "csv":
        values = [line.split(",")[0].strip() for line in text.splitlines()]
        return cfrac.MomentSequence(tuple(v for v in values if v))
    return cfrac.MomentSequence.from_dict(json.loads(text))


def load_moments(args) -> cfrac.MomentSequence:
    if getattr(args, "values", None) is not None:
        return cfrac.MomentSequence(args.values)
    if args.moments is None:
        raise InputError("one of --moments or --values is required")
    text = _read_text(args.moments)
    fmt = args.format
    if fmt is None:
        fmt = "csv" if args.moments.endswith(".csv") else "json"
    try:
        return parse_moments_text(text, fmt)
    except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"{args.moments}: bad moment data: {exc}")


def format_moments(m: cfrac.MomentSequence, fmt) -> str:
    if fmt == "csv":
        return "\n".join(rat_str(x) for x in m.moments)
    return dumps(m.to_dict())


def _load_scoeffs(args) -> cfrac.SCoefficients:
    if args.input is not None:
        return cfrac.SCoefficients.from_dict(_load_json(args.input))
    if args.alphas is None:
        raise InputError("one of --alphas or --input is required")
    return cfrac.SCoefficients(args.c, args.alphas, args.terminated)


def _add_moment_input(p):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--moments", metavar="FILE", help="moment file (JSON or CSV; '-' for stdin)")
    src.add_argument("--values", type=rational_list, metavar="LIST", help="comma-separated moments")
    p.add_argument("--format", choices=("json", "csv"), default=None)


def _add_s_input(p):
    p.add_argument("--alphas", type=rational_list, metavar="LIST")
    p.add_argument("--c", type=rational, default=Fraction(1))
    p.add_argument("--terminated", action="store_true")
    p.add_argument("--input", metavar="FILE", help="SCoefficients JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stieltjes-cf",
        description="Exact S-/J-fraction algebra and support certificates for moment sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="series of an S-fraction")
    _add_s_input(p)
    p.add_argument("--order", type=nonnegative_int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default=None)

    p = sub.add_parser("extract", help="S-fraction coefficients of a moment prefix")
    _add_moment_input(p)

    p = sub.add_parser("contract", help="even contraction S -> J")
    _add_s_input(p)

    p = sub.add_parser("binomial", help="xi-binomial transform")
    _add_moment_input(p)
    p.add_argument("--xi", type=rational, required=True)

    p = sub.add_parser("jshift", help="shift J-fraction gammas by xi")
    p.add_argument("--xi", type=rational, required=True)
    p.add_argument("--gammas", type=rational_list)
    p.add_argument("--betas", type=rational_list, default=())
    p.add_argument("--input", metavar="FILE", help="JCoefficients JSON")

    p = sub.add_parser("certify", help="certify support in [xi, inf) (or [0, xi] with --wall)")
    _add_moment_input(p)
    p.add_argument("--xi", type=rational, required=True)
    p.add_argument("--wall", action="store_true")

    p = sub.add_parser("wall", help="certify support in [0, xi]")
    _add_moment_input(p)
    p.add_argument("--xi", type=positive_rational, required=True)

    p = sub.add_parser("dualcheck", help="compare the two g computations")
    _add_moment_input(p)
    p.add_argument("--xi", type=positive_rational, required=True)

    p = sub.add_parser("g0max", help="bracket the largest admissible g0")
    _add_moment_input(p)
    p.add_argument("--xi", type=positive_rational, required=True)
    p.add_argument("--tol", type=positive_rational, default=Fraction(1, 10**6))

    p = sub.add_parser("oracle", help="measure generation and Hankel checks")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    g = osub.add_parser("gen", help="reproducible random discrete measure")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--count", type=nonnegative_int, required=True)
    g.add_argument("--min", type=rational, required=True, dest="min_atom")
    g.add_argument("--max", type=rational, required=True, dest="max_atom")
    g.add_argument("--denom-bound", type=nonnegative_int, default=6)
    g.add_argument("--n-max", type=nonnegative_int, default=None,
                   help="also emit moments a_0..a_n")
    h = osub.add_parser("hankel", help="Hankel leading minors")
    _add_moment_input(h)

    p = sub.add_parser("paper-demos", help="reproduce the worked examples")
    p.add_argument("--table", action="store_true", help="plain-text table instead of JSON")

    return parser


def _verdict_exit(v: cert.CertVerdict) -> int:
    return EXIT_REFUTED if v.refuted else EXIT_OK


def dispatch(args) -> tuple:
    """Return (stdout text, exit code)."""
    cmd = args.command
    if cmd == "expand":
        series = cfrac.s_expand(_load_scoeffs(args), args.order)
        return format_moments(cfrac.MomentSequence(series.coeffs), args.format), EXIT_OK
    if cmd == "extract":
        return dumps(cfrac.s_extract(load_moments(args)).to_dict()), EXIT_OK
    if cmd == "contract":
        return dumps(cfrac.contract(_load_scoeffs(args)).to_dict()), EXIT_OK
    if cmd == "binomial":
        b = transforms.binomial_transform(load_moments(args), args.xi)
        return format_moments(b, args.format), EXIT_OK
    if cmd == "jshift":
        if args.input is not None:
            j = cfrac.JCoefficients.from_dict(_load_json(args.input))
        elif args.gammas is not None:
            j = cfrac.JCoefficients(args.gammas, args.betas)
        else:
            raise InputError("one of --gammas or --input is required")
        return dumps(transforms.j_shift(j, args.xi).to_dict()), EXIT_OK
    if cmd in ("certify", "wall"):
        a = load_moments(args)
        if cmd == "wall" or args.wall:
            if args.xi <= 0:
                raise InputError("--xi must be positive for the [0, xi] certificate")
            v = cert.certify_wall(a, args.xi)
        else:
            if args.xi < 0:
                raise InputError("--xi must be nonnegative")
            v = cert.certify_xi_stieltjes(a, args.xi)
        return dumps(v.to_dict()), _verdict_exit(v)
    if cmd == "dualcheck":
        a = load_moments(args)
        v = cert.certify_xi_stieltjes(a, args.xi)
        if v.refuted:
            return dumps({"verdict": v.to_dict()}), EXIT_REFUTED
        r1, r2 = cert.dual_route_check(a, args.xi)
        return dumps({"route_i": r1.to_list(), "route_ii": r2.to_list(), "agree": True}), EXIT_OK
    if cmd == "g0max":
        try:
            iv = cert.g0_max(load_moments(args), args.xi, args.tol)
        except cert.InfeasibleBase as exc:
            return dumps({"error": str(exc)}), EXIT_REFUTED
        return dumps(iv.to_dict()), EXIT_OK
    if cmd == "oracle":
        if args.oracle_command == "gen":
            if args.min_atom > args.max_atom:
                raise InputError("--min exceeds --max")
            m = oracle.random_measure(args.seed, args.count, args.min_atom,
                                      args.max_atom, max(args.denom_bound, 1))
            out = m.to_dict()
            if args.n_max is not None:
                out["moments"] = oracle.moments(m, args.n_max).to_dict()["moments"]
            return dumps(out), EXIT_OK
        return dumps(oracle.hankel_report(load_moments(args)).to_dict()), EXIT_OK
    if cmd == "paper-demos":
        results = run_demos()
        code = EXIT_OK if all(r.passed for r in results) else EXIT_REFUTED
        if args.table:
            return format_table(results), code
        return dumps({"all_passed": code == EXIT_OK,
                      "demos": [r.to_dict() for r in results]}), code
    raise InputError(f"unknown command {cmd}")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        text, code = dispatch(args)
    except (InputError, ValueError, ZeroDivisionError) as exc:
        print(f"stieltjes-cf: error: {exc}", file=stderr)
        return EXIT_USAGE
    print(text, file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
