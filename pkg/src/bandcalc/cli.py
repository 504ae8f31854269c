"""Command line interface.

    bandcalc cf eval -- 0 2 2
    bandcalc cf expand 3/2 --parity odd
    bandcalc band --beta "s2^5 s1^7" --slope 3/2
    bandcalc knot --r -3 --s -2 --slope 5/4
    bandcalc enumerate --r 5 --s 7 --cf-len 3 --cf-digit 4
    bandcalc verify all

Exit status: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify
from .banding import band_slope
from .braid3 import parse_braid
from .exactmath import ContFrac, ExtRational, Slope, cf_eval, cf_expand
from .family import KnotSpec, catalog_entry, enumerate_catalog
from .spaces import lens_from_two_bridge


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _slope(text: str) -> Slope:
    try:
        return Slope.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_cf(args) -> int:
    if args.cf_command == "eval":
        f = ContFrac(args.digits)
    else:
        try:
            v = ExtRational.parse(args.value)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        f = cf_expand(v, args.parity)
    if args.json:
        print(_dump({"digits": list(f.digits), "value": str(cf_eval(f))}))
    elif args.cf_command == "eval":
        print(cf_eval(f))
    else:
        print(" ".join(map(str, f.digits)))
    return 0


def cmd_band(args) -> int:
    try:
        w = parse_braid(args.beta)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    result = band_slope(w, _slope(args.slope))
    print(_dump({
        "raw": list(result.raw_pair),
        "link": str(result.link),
        "cover": str(lens_from_two_bridge(result.link)),
    }))
    return 0


def cmd_knot(args) -> int:
    entry = catalog_entry(KnotSpec(args.r, args.s, _slope(args.slope)), args.paper_sign)
    print(entry.to_json())
    return 0


def cmd_enumerate(args) -> int:
    if args.cf_len < 1 or args.cf_digit < 1:
        raise UsageError("--cf-len and --cf-digit must be at least 1")
    for entry in enumerate_catalog(args.r, args.s, args.cf_len, args.cf_digit, args.paper_sign):
        print(entry.to_json())
    return 0


def cmd_verify(args) -> int:
    if args.bound is not None and args.bound < 1:
        raise UsageError("--bound must be at least 1")
    ok = True
    for rep in verify.run_suite(args.suite, args.bound, args.seed):
        ok &= rep.ok
        if args.json:
            print(_dump(rep.to_dict()))
            continue
        status = "PASS" if rep.ok else "FAIL"
        print(f"{status} {rep.suite}: {rep.cases} cases, {rep.failure_count} failures")
        for rendering, expected, actual in rep.failures:
            print(f"    {rendering}: expected {expected}, got {actual}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bandcalc", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    cf = sub.add_parser("cf", help="negative continued fractions")
    cf_sub = cf.add_subparsers(dest="cf_command", required=True)
    ev = cf_sub.add_parser("eval", help="evaluate [a1, ..., an]")
    ev.add_argument("digits", nargs="*", type=int)
    ev.add_argument("--json", action="store_true")
    ex = cf_sub.add_parser("expand", help="expand q/p")
    ex.add_argument("value", help="q/p, with 1/0 for infinity")
    ex.add_argument("--parity", choices=("any", "odd", "even"), default="any")
    ex.add_argument("--json", action="store_true")
    cf.set_defaults(func=cmd_cf)

    band = sub.add_parser("band", help="band a closed 3-braid along the arc of a slope")
    band.add_argument("--beta", required=True, help='braid word, e.g. "s2^5 s1^7"')
    band.add_argument("--slope", required=True, help="q/p")
    band.set_defaults(func=cmd_band)

    knot = sub.add_parser("knot", help="lens space surgery data for one knot K^{p,q}_{r,s}")
    knot.add_argument("--r", type=int, required=True)
    knot.add_argument("--s", type=int, required=True)
    knot.add_argument("--slope", required=True, help="q/p")
    knot.add_argument("--paper-sign", action="store_true", help="use the slope (p,-q) for the target")
    knot.set_defaults(func=cmd_knot)

    en = sub.add_parser("enumerate", help="catalog of knots for fixed (r, s)")
    en.add_argument("--r", type=int, required=True)
    en.add_argument("--s", type=int, required=True)
    en.add_argument("--cf-len", type=int, required=True)
    en.add_argument("--cf-digit", type=int, required=True)
    en.add_argument("--paper-sign", action="store_true")
    en.set_defaults(func=cmd_enumerate)

    ver = sub.add_parser("verify", help="run property suites")
    ver.add_argument("suite", choices=[*verify.SUITES, "all"])
    ver.add_argument("--bound", type=int)
    ver.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    ver.add_argument("--json", action="store_true")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"bandcalc: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
