"""Command-line interface.

Exit status: 0 on success, 1 when a check fails, 2 on usage or parse
errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import eigen, quotient, verify
from .core import Axis, Element, ParseError, Sigma, parse_element, print_element, sort_key
from .product import mul_basis
from .symmetry import apply, parse_map


def positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def axis_range(text):
    lo, sep, hi = text.partition("..")
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if not sep or lo > hi:
        raise argparse.ArgumentTypeError(f"expected A..B with A <= B, got {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=None)
    common.add_argument("--signed", action="store_true",
                        help="print coefficients 3, 4 as -2, -1")

    p = argparse.ArgumentParser(prog="hhat", description="Exact computations in the algebra Ĥ over GF(5).")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("mul", parents=[common], help="product of two elements")
    m.add_argument("left")
    m.add_argument("right")

    act = sub.add_parser("act", parents=[common], help="image under an automorphism")
    act.add_argument("--map", required=True, dest="map_name",
                     help="tau0, f, theta, sigma:<i> or tau:<j>")
    act.add_argument("element")

    e = sub.add_parser("eig", parents=[common], help="ad(a[0]) eigendecomposition")
    e.add_argument("element")

    chk = sub.add_parser("check", help="run a verification")
    csub = chk.add_subparsers(dest="what", required=True)
    fu = csub.add_parser("fusion", parents=[common])
    fu.add_argument("--window", type=positive_int, default=12)
    pr = csub.add_parser("primitivity", parents=[common])
    pr.add_argument("--window", type=positive_int, default=16)
    ids = csub.add_parser("identities", parents=[common])
    ids.add_argument("--set", dest="id_set", default="all",
                     choices=("transition", "useful", "uv", "section3", "generation", "all"))
    ids.add_argument("--max-index", type=positive_int, default=None)

    q = sub.add_parser("quotient", parents=[common], help="windowed quotient presets")
    q.add_argument("--preset", required=True, choices=tuple(quotient.PRESETS))
    q.add_argument("--window", type=positive_int, required=True)

    t = sub.add_parser("table", parents=[common], help="multiplication table of axes")
    t.add_argument("--axes", type=axis_range, required=True, help="A..B (use --axes=-2..3 for negatives)")
    return p


def _elem(text):
    return parse_element(text)


def _fmt(x: Element, args) -> str:
    return print_element(x, signed=args.signed)


def _emit_reports(reports, fmt, out):
    passed = all(r.to_dict()["pass"] for r in reports)
    if fmt == "text":
        for r in reports:
            d = r.to_dict()
            name = d.get("identity") or d.get("check")
            out.write(f"{'PASS' if d['pass'] else 'FAIL'} {name}\n")
            if d.get("firstFailure"):
                out.write(f"  first failure: {json.dumps(d['firstFailure'])}\n")
    else:
        payload = [r.to_dict() for r in reports]
        if len(payload) == 1:
            payload = payload[0]
        else:
            payload = {"pass": passed, "reports": payload}
        out.write(json.dumps(payload) + "\n")
    return 0 if passed else 1


def _table_symbols(lo, hi):
    axes = [Axis(i) for i in range(lo, hi + 1)]
    extra = set()
    for b1 in axes:
        for b2 in axes:
            extra.update(b for b in mul_basis(b1, b2).support() if type(b) is Sigma)
    return axes + sorted(extra, key=sort_key)


def _table(args, out):
    syms = _table_symbols(*args.axes)
    names = [str(b) for b in syms]
    cells = [[_fmt(mul_basis(b1, b2), args) for b2 in syms] for b1 in syms]
    fmt = args.format or "text"
    if fmt == "json":
        out.write(json.dumps({"symbols": names, "products": cells}) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow([""] + names)
        for name, row in zip(names, cells):
            w.writerow([name] + row)
    else:
        for k, b1 in enumerate(names):
            for l in range(k, len(names)):
                out.write(f"{b1} * {names[l]} = {cells[k][l]}\n")
    return 0


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args, out)
    except (ParseError, ValueError) as exc:
        sys.stderr.write(f"hhat: error: {exc}\n")
        return 2


def _dispatch(args, out) -> int:
    fmt = args.format
    if args.command == "mul":
        x = _elem(args.left) * _elem(args.right)
        out.write((json.dumps({"product": _fmt(x, args)}) if fmt == "json" else _fmt(x, args)) + "\n")
        return 0
    if args.command == "act":
        x = apply(parse_map(args.map_name), _elem(args.element))
        out.write((json.dumps({"image": _fmt(x, args)}) if fmt == "json" else _fmt(x, args)) + "\n")
        return 0
    if args.command == "eig":
        d = eigen.decompose(_elem(args.element))
        lam = d.lam if not args.signed or d.lam < 3 else d.lam - 5
        rows = {"lambda": lam, "0": _fmt(d.comp0, args), "2": _fmt(d.comp2, args),
                "-2": _fmt(d.comp_b, args)}
        if fmt == "json":
            out.write(json.dumps(rows) + "\n")
        else:
            for k, v in rows.items():
                out.write(f"{k}: {v}\n")
        return 0
    if args.command == "check":
        fmt = fmt or "json"
        if args.what == "fusion":
            return _emit_reports([eigen.check_fusion(args.window)], fmt, out)
        if args.what == "primitivity":
            return _emit_reports([eigen.check_primitivity(args.window)], fmt, out)
        return _emit_reports(verify.run_set(args.id_set, args.max_index), fmt, out)
    if args.command == "quotient":
        span, dim = quotient.PRESETS[args.preset](args.window)
        if fmt == "json":
            out.write(span.to_json() + "\n")
        elif fmt == "csv":
            out.write(span.to_csv())
        else:
            out.write(f"rank: {span.rank}\nquotientDim: {dim}\n"
                      f"truncationLoss: {str(span.truncation_loss).lower()}\n")
        return 0
    if args.command == "table":
        return _table(args, out)
    raise AssertionError(args.command)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
