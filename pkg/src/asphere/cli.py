"""Command-line surface.

Subcommands: convert, subsystem, check, shift, typea, sweep.  Text
output by default, JSON under --json.  Exit codes: 0 success/certified,
1 not_certified, 2 usage or input error, 3 internal invariant
violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import render
from .certify import certify, is_totally_aspherical_type_A
from .diophantine import SearchBudgetExceeded
from .params import (
    CherednikParam,
    LambdaParam,
    cherednik_to_lambda,
    h_coordinates,
    lambda_to_cherednik,
)
from .rationals import format_rational, parse_rational
from .roots import QuiverShape, simple_roots_of_subsystem
from .shift import GuaranteeViolation, find_aspherical_shift

EXIT_OK = 0
EXIT_NOT_CERTIFIED = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3

DEFAULT_SWEEP_CAP = 10**6


class InputError(ValueError):
    pass


def _parse_rational_list(text: str, expected: int | None = None) -> tuple[Fraction, ...]:
    try:
        values = tuple(parse_rational(part) for part in text.split(","))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if expected is not None and len(values) != expected:
        raise InputError(f"expected {expected} comma-separated rationals, got {len(values)}")
    return values


def _lambda_from_args(args) -> LambdaParam:
    """Build the quiver parameter from --lambda or from --kappa/--c."""
    if args.lam is not None:
        if args.kappa is not None or args.c is not None:
            raise InputError("give either --lambda or --kappa/--c, not both")
        return LambdaParam(args.ell, _parse_rational_list(args.lam, args.ell))
    if args.kappa is None:
        raise InputError("either --lambda or --kappa is required")
    kappa = parse_rational(args.kappa)
    c = _parse_rational_list(args.c, args.ell - 1) if args.c else ()
    if len(c) != args.ell - 1:
        raise InputError(f"expected {args.ell - 1} cyclic parameters in --c")
    conv = cherednik_to_lambda(CherednikParam(args.ell, kappa, c), as_printed=args.as_printed)
    if conv.rational is None:
        raise InputError(
            "the quiver coordinates of this parameter are not rational; "
            "the exact pipeline only handles parameters with rational lambda"
        )
    return conv.rational


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _cmd_typea(args) -> int:
    c = parse_rational(args.c)
    verdict, reason = is_totally_aspherical_type_A(c, args.n)
    payload = {
        "schema_version": render.SCHEMA_VERSION,
        "command": "typea",
        "n": args.n,
        "c": format_rational(c),
        "totally_aspherical": verdict,
        "reason": reason,
    }
    text = "totally aspherical" if verdict else "not totally aspherical"
    if reason:
        text += f" ({reason})"
    _emit(args, payload, text)
    return EXIT_OK if verdict else EXIT_NOT_CERTIFIED


def _cmd_check(args) -> int:
    if args.ell == 1:
        # The quiver machinery does not apply; fall back to the
        # symmetric-group criterion on kappa.
        if args.kappa is None:
            raise InputError("--kappa is required for ell = 1")
        args.c = args.kappa
        return _cmd_typea(args)
    lam = _lambda_from_args(args)
    cert = certify(lam, args.n, window=args.window)
    payload = {
        "schema_version": render.SCHEMA_VERSION,
        "command": "check",
        "ell": args.ell,
        "n": args.n,
        "lambda": render.lambda_json(lam),
        "certificate": render.certificate_json(cert),
    }
    if cert.verdict == "certified":
        text = "certified: totally aspherical"
    else:
        text = "not certified (this does not assert non-asphericity)"
        if cert.condition1.violator is not None:
            text += f"\n  pairing bound violated at root {list(cert.condition1.violator)}"
        if not cert.condition2.holds:
            text += f"\n  kappa = {format_rational(cert.condition2.kappa)} fails the arithmetic condition"
    _emit(args, payload, text)
    return EXIT_OK if cert.verdict == "certified" else EXIT_NOT_CERTIFIED


def _cmd_shift(args) -> int:
    lam = _lambda_from_args(args)
    result = find_aspherical_shift(lam, args.n, window=args.window)
    payload = {
        "schema_version": render.SCHEMA_VERSION,
        "command": "shift",
        "ell": args.ell,
        "n": args.n,
        "lambda": render.lambda_json(lam),
        **render.shift_json(result),
    }
    text = (
        f"m = {list(result.m)}\n"
        f"lambda' = [{', '.join(render.lambda_json(result.lambda_prime))}]\n"
        f"targets = {list(result.targets)}\n"
        "certified: totally aspherical"
    )
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_subsystem(args) -> int:
    lam = _lambda_from_args(args)
    shape = QuiverShape(args.ell, args.n)
    report = simple_roots_of_subsystem(shape, lam, window=args.window)
    payload = {
        "schema_version": render.SCHEMA_VERSION,
        "command": "subsystem",
        "ell": args.ell,
        "lambda": render.lambda_json(lam),
        "subsystem": render.subsystem_json(report),
    }
    text = (
        f"kind = {report.kind}, period = {report.period}\n"
        f"simple roots: {[list(b) for b in report.simple_roots]}"
    )
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_convert(args) -> int:
    payload: dict = {
        "schema_version": render.SCHEMA_VERSION,
        "command": "convert",
        "ell": args.ell,
        "as_printed": args.as_printed,
    }
    if args.lam is not None:
        lam = LambdaParam(args.ell, _parse_rational_list(args.lam, args.ell))
        conv = lambda_to_cherednik(lam)
        payload["input"] = "lambda"
        payload["lambda"] = {"rational": render.lambda_json(lam), "cyclotomic": None}
        payload["cherednik"] = render.cherednik_conversion_json(conv)
        payload["h_coordinates"] = (
            render.h_coordinates_json(h_coordinates(conv.rational, n=args.n))
            if conv.rational is not None
            else None
        )
        text = f"kappa = {format_rational(conv.kappa)}"
        if conv.rational is not None:
            text += f"\nc = [{', '.join(format_rational(x) for x in conv.rational.c)}]"
        else:
            text += "\nc: not rational (see --json for exact cyclotomic values)"
    else:
        if args.kappa is None:
            raise InputError("either --lambda or --kappa is required")
        kappa = parse_rational(args.kappa)
        c = _parse_rational_list(args.c, args.ell - 1) if args.c else ()
        if len(c) != args.ell - 1:
            raise InputError(f"expected {args.ell - 1} cyclic parameters in --c")
        param = CherednikParam(args.ell, kappa, c)
        conv = cherednik_to_lambda(param, as_printed=args.as_printed)
        payload["input"] = "cherednik"
        payload["lambda"] = render.lambda_conversion_json(conv)
        payload["cherednik"] = {
            "kappa": format_rational(kappa),
            "c_rational": [format_rational(x) for x in c],
            "c_cyclotomic": None,
        }
        payload["h_coordinates"] = render.h_coordinates_json(h_coordinates(param, n=args.n))
        if conv.rational is not None:
            text = f"lambda = [{', '.join(render.lambda_json(conv.rational))}]"
        else:
            text = "lambda: not rational (see --json for exact cyclotomic values)"
    _emit(args, payload, text)
    return EXIT_OK


def _parse_grid(text: str, ell: int):
    segments = text.split(";")
    if len(segments) != ell:
        raise InputError(f"expected {ell} grid segments, got {len(segments)}")
    axes = []
    for seg in segments:
        pieces = seg.split(":")
        if len(pieces) != 3:
            raise InputError(f"grid segment {seg!r} is not start:step:count")
        start = parse_rational(pieces[0])
        step = parse_rational(pieces[1])
        try:
            count = int(pieces[2])
        except ValueError:
            raise InputError(f"malformed grid count in {seg!r}") from None
        if count < 1:
            raise InputError("grid count must be at least 1")
        axes.append([start + i * step for i in range(count)])
    return axes


def _cmd_sweep(args) -> int:
    axes = _parse_grid(args.grid, args.ell)
    total = 1
    for axis in axes:
        total *= len(axis)
    if total > args.cap:
        raise InputError(f"grid size {total} exceeds cap {args.cap}")

    def points(prefix, remaining):
        if not remaining:
            yield tuple(prefix)
            return
        for value in remaining[0]:
            yield from points(prefix + [value], remaining[1:])

    records = []
    certified = 0
    for values in points([], axes):
        lam = LambdaParam(args.ell, values)
        cert = certify(lam, args.n)
        if cert.verdict == "certified":
            certified += 1
        records.append(
            {
                "lambda": render.lambda_json(lam),
                "verdict": cert.verdict,
                "kappa": format_rational(cert.condition2.kappa),
                "subsystem_kind": cert.subsystem.kind,
            }
        )
    payload = {
        "schema_version": render.SCHEMA_VERSION,
        "command": "sweep",
        "ell": args.ell,
        "n": args.n,
        "records": records,
        "summary": {
            "total": total,
            "certified": certified,
            "not_certified": total - certified,
        },
    }
    if args.json:
        rendered = json.dumps(payload, indent=2)
    else:
        lines = [
            f"{'[' + ', '.join(rec['lambda']) + ']'}  {rec['verdict']}"
            f"  kappa={rec['kappa']}  subsystem={rec['subsystem_kind']}"
            for rec in records
        ]
        lines.append(f"total={total} certified={certified} not_certified={total - certified}")
        rendered = "\n".join(lines)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(rendered + "\n")
    else:
        print(rendered)
    return EXIT_OK


def _add_param_flags(parser, need_n=True):
    parser.add_argument("--ell", type=int, required=True, help="number of quiver vertices")
    if need_n:
        parser.add_argument("--n", type=int, required=True, help="rank of the wreath product")
    else:
        parser.add_argument("--n", type=int, default=1, help="rank of the wreath product")
    parser.add_argument("--lambda", dest="lam", help='quiver coordinates, e.g. "1/2,0"')
    parser.add_argument("--kappa", help="symmetric-group reflection parameter")
    parser.add_argument("--c", help='cyclic reflection parameters, e.g. "1/2,-1/4"')
    parser.add_argument("--as-printed", action="store_true", help="k-independent exponent convention")
    parser.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asphere",
        description="Exact certification of totally aspherical Cherednik parameters for G(ell,1,n)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("typea", help="symmetric-group criterion for a single parameter")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", required=True, help="reflection parameter, e.g. \"-1/2\"")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_typea)

    p = sub.add_parser("check", help="certify a parameter of G(ell,1,n)")
    _add_param_flags(p)
    p.add_argument("--window", type=int, help="override the enumeration window (oracle testing)")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("shift", help="find an integral shift into the certified locus")
    _add_param_flags(p)
    p.add_argument("--window", type=int)
    p.set_defaults(func=_cmd_shift)

    p = sub.add_parser("subsystem", help="simple roots of the integral subsystem")
    _add_param_flags(p, need_n=False)
    p.add_argument("--window", type=int)
    p.set_defaults(func=_cmd_subsystem)

    p = sub.add_parser("convert", help="convert between the coordinate systems")
    _add_param_flags(p, need_n=False)
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("sweep", help="certify every point of a rational grid")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grid", required=True, help='per-coordinate "start:step:count", semicolon-separated')
    p.add_argument("--cap", type=int, default=DEFAULT_SWEEP_CAP)
    p.add_argument("--output", help="write the report to a file instead of stdout")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_sweep)

    return parser


_VALUE_FLAGS = {"--c", "--kappa", "--lambda", "--grid"}


def _merge_value_flags(argv):
    """Join value flags with their argument so negative rationals such
    as "-1/2" are not mistaken for option strings by argparse."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _merge_value_flags(list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        if getattr(args, "json", False):
            print(json.dumps(render.error_json("input_error", str(exc))))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (GuaranteeViolation, SearchBudgetExceeded, AssertionError) as exc:
        if getattr(args, "json", False):
            print(json.dumps(render.error_json("internal_error", str(exc))))
        else:
            print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
