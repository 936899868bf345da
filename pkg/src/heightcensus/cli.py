"""Command-line front end: ``heightcensus <subcommand> ...``.

Exit codes: 0 success, 1 invariant or suite failure, 2 bad arguments.
Errors are reported on stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import asdict
from fractions import Fraction
from typing import Sequence

from . import io as hio
from .algnum import RealAlgebraic, pow_int
from .census import CensusRecord, census_A, census_B, census_mahler, fit_slope, parse_bound, slope_window
from .constructions import eisenstein_family, quartic_family
from .heightdyn import iterate
from .polyz import IntPoly
from .rootloc import InvariantError
from .verify import SUITES


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse calls this for bad flags
        raise UsageError(message)


def _fail(code: int, kind: str, message: str, **extra) -> int:
    json.dump({"error": kind, "message": message, **extra}, sys.stderr)
    sys.stderr.write("\n")
    return code


def _positive_int(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _natural(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return n


def _bound(text: str):
    try:
        return parse_bound(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_fraction(text: str) -> Fraction:
    try:
        x = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if x <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return x


def _add_census_flags(p: argparse.ArgumentParser, bound_flag: str, bound_help: str) -> None:
    p.add_argument("--degree", type=_positive_int, required=True)
    p.add_argument("--k", type=_natural, required=True, help="number of conjugates strictly inside the unit disk")
    p.add_argument(bound_flag, type=_bound, required=True, help=bound_help)
    p.add_argument(
        "--identify-sign",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="count A and -A once (default); only affects census-mahler",
    )
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--threads", type=_positive_int, default=None, help="worker processes (env HEIGHT_CENSUS_THREADS)")


BOUND_HELP = "bound: integer, p/q, decimal, sqrt(n) or n^(p/q)"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="heightcensus", description="Exact censuses of Weil heights and Mahler measures.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    _add_census_flags(sub.add_parser("census-a", help="heights with multiplicities"), "--max-height", BOUND_HELP)
    _add_census_flags(sub.add_parser("census-b", help="distinct height values"), "--max-height", BOUND_HELP)
    _add_census_flags(sub.add_parser("census-mahler", help="Mahler measures of polynomials"), "--max-measure", BOUND_HELP)

    p = sub.add_parser("slopes", help="log-log slope of cumulative counts from a census CSV")
    p.add_argument("--input", required=True)
    p.add_argument("--window", choices=("upper-half", "all"), default="upper-half")
    p.add_argument("--gnuplot", help="also write the (x, cumulative count) points here")

    p = sub.add_parser("orbit", help="iterate the height map")
    p.add_argument("--minpoly", required=True, help='coefficients low to high, e.g. "-1,-1,1"')
    p.add_argument("--root-index", type=_natural, required=True, help="index among real roots, ascending")
    p.add_argument("--max-steps", type=_positive_int, default=8)
    p.add_argument("--eps", type=_positive_fraction, default=Fraction(1, 1000))

    p = sub.add_parser("family", help="explicit polynomial families")
    p.add_argument("--name", choices=("eisenstein", "quartic"), required=True)
    p.add_argument("--params", type=int, nargs="+", required=True, help="eisenstein: N d; quartic: r")

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--threads", type=_positive_int, default=None)
    return parser


# ---------------------------------------------------------------------------
# subcommands


def _emit(records: list[CensusRecord], args) -> None:
    text = hio.records_text(records, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _census_a(args) -> int:
    _emit(census_A(args.k, args.degree, args.max_height, args.threads), args)
    return 0


def _census_b(args) -> int:
    values, _ = census_B(args.k, args.degree, args.max_height, args.threads)
    d = args.degree
    records = [CensusRecord(v, d, args.k, 1, pow_int(v, d).degree) for v in values]
    _emit(records, args)
    return 0


def _census_mahler(args) -> int:
    recs = census_mahler(args.k, args.degree, args.max_measure, args.threads, identify_sign=args.identify_sign)
    _emit(recs, args)
    return 0


def cumulative_points(path: str) -> list[tuple[float, int]]:
    """(x, number of census entries with key <= x) for each distinct key."""
    with open(path, encoding="utf-8", newline="") as fh:
        if path.endswith(".json"):
            rows = hio.read_json(fh)
        else:
            rows = hio.read_csv(fh)
    rows.sort(key=lambda r: r.key)
    pts: list[tuple[float, int]] = []
    total = 0
    for r in rows:
        total += r.count
        pts.append((float(r.key), total))
    return pts


def _slopes(args) -> int:
    pts = cumulative_points(args.input)
    if args.gnuplot:
        with open(args.gnuplot, "w", encoding="utf-8", newline="") as fh:
            hio.write_gnuplot(pts, fh)
    est = fit_slope(slope_window(pts, args.window))
    out = asdict(est)
    out["window"] = args.window
    json.dump(out, sys.stdout)
    sys.stdout.write("\n")
    return 0


def _orbit(args) -> int:
    seed = RealAlgebraic.from_root(IntPoly.parse(args.minpoly), args.root_index)
    rep = iterate(seed, args.max_steps, args.eps)
    for n, v in enumerate(rep.trajectory):
        print(f"{n}\t{v.minpoly}\t{v.approx(30)}\t{v.degree}")
    print(f"classification\t{rep.classification.describe()}")
    for note in rep.notes:
        print(f"note\t{note}")
    return 0


def _family(args) -> int:
    if args.name == "eisenstein":
        if len(args.params) != 2:
            raise UsageError("eisenstein takes --params N d")
        polys = [eisenstein_family(*args.params)]
    else:
        if len(args.params) != 1:
            raise UsageError("quartic takes --params r")
        _, polys = quartic_family(args.params[0])
    for p in polys:
        print(p)
    return 0


def _verify(args) -> int:
    fn = SUITES[args.suite]
    res = fn(threads=args.threads) if "threads" in fn.__code__.co_varnames else fn()
    summary = {"suite": res.suite, "passed": res.passed, "checks": [asdict(c) for c in res.checks]}
    json.dump(summary, sys.stdout, indent=1)
    sys.stdout.write("\n")
    if not res.passed:
        return _fail(1, "suite-failed", f"suite {res.suite} failed", failures=[asdict(c) for c in res.failures()])
    return 0


COMMANDS = {
    "census-a": _census_a,
    "census-b": _census_b,
    "census-mahler": _census_mahler,
    "slopes": _slopes,
    "orbit": _orbit,
    "family": _family,
    "verify": _verify,
}


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Turn ``--minpoly -1,0,1`` into ``--minpoly=-1,0,1`` so argparse accepts it."""
    out: list[str] = []
    it = iter(argv)
    for a in it:
        if a == "--minpoly":
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(_glue_negative_values(argv))
        return COMMANDS[args.command](args)
    except UsageError as exc:
        return _fail(2, "usage", str(exc))
    except InvariantError as exc:
        return _fail(1, "invariant", str(exc))
    except (ValueError, ArithmeticError, OSError, csv.Error, KeyError) as exc:
        return _fail(2, type(exc).__name__, str(exc))


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
