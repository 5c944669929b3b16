"""Command-line surface: show, prod, verify, identify, family.

Elements are named either by ``--family`` (pascal, binomial:r, catalan,
moment:r, a085478) or by a pair of generating-function expressions ``--g``
and ``--f``.  Expressions are evaluated with automatic precision headroom
(order = size + n + 2) so users never manage truncation orders by hand.

Exit codes: 0 on success (and when ``verify`` finds every instance equal),
1 when ``verify`` finds a mismatch, 2 on usage, parse or precision errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from .arrays import RiordanElement
from .errors import RiordanError
from .families import (
    FAMILY_NAMES,
    family_element,
    iterate_second_production,
    orthogonal_polys,
)
from .gfexpr import evaluate_text
from .oeis import load_stripped
from .production import nth_production_matrix, production_matrix, verify_nth_conjecture

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_ERROR = 2

DEFAULT_SIZE = 8
OEIS_PATH_ENV = "OEIS_STRIPPED_PATH"


def _headroom(size: int, n: int = 0) -> int:
    return size + n + 2


def _resolve_element(args: argparse.Namespace, order: int) -> RiordanElement:
    has_expr = args.g is not None or args.f is not None
    if args.family and has_expr:
        raise RiordanError("give either --family or --g/--f, not both")
    if args.family:
        return family_element(args.family, order)
    if args.g is None or args.f is None:
        raise RiordanError("an element needs --family, or both --g and --f")
    return RiordanElement(
        evaluate_text(args.g, order), evaluate_text(args.f, order)
    )


def _parse_n_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError as err:
        raise RiordanError(
            f"bad --n value {text!r}: use a single integer or a range like 2..4"
        ) from err
    if lo < 1 or hi < lo:
        raise RiordanError(f"bad --n range {text!r}: need 1 <= first <= last")
    return list(range(lo, hi + 1))


def _emit(doc: dict, text: str, as_json: bool) -> None:
    print(json.dumps(doc, indent=2) if as_json else text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_show(args: argparse.Namespace) -> int:
    element = _resolve_element(args, _headroom(args.size))
    matrix = element.matrix(args.size)
    _emit({"matrix": matrix.to_json_entries()}, matrix.to_text(), args.json)
    return EXIT_OK


def _cmd_prod(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise RiordanError("--n must be at least 1")
    element = _resolve_element(args, _headroom(args.size, args.n))
    p = nth_production_matrix(element, args.n, args.size)
    _emit(
        {"n": args.n, "production_matrix": p.to_json_entries()},
        p.to_text(),
        args.json,
    )
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    ns = _parse_n_range(args.n)
    element = _resolve_element(args, _headroom(args.size, max(ns)))
    reports = [verify_nth_conjecture(element, n, args.size) for n in ns]
    lines = []
    for report in reports:
        if report.equal:
            lines.append(f"n={report.n} size={report.size}: equal")
        else:
            i, j = report.first_mismatch
            lines.append(
                f"n={report.n} size={report.size}: MISMATCH at ({i}, {j}): "
                f"produced={report.produced[i, j]} "
                f"closed_form={report.closed_form[i, j]}"
            )
            lines.append("produced:")
            lines.append(report.produced.to_text())
            lines.append("closed form:")
            lines.append(report.closed_form.to_text())
    all_equal = all(r.equal for r in reports)
    _emit(
        {"reports": [r.to_json_dict() for r in reports], "all_equal": all_equal},
        "\n".join(lines),
        args.json,
    )
    return EXIT_OK if all_equal else EXIT_MISMATCH


def _cmd_identify(args: argparse.Namespace) -> int:
    dump = args.oeis or os.environ.get(OEIS_PATH_ENV)
    if not dump:
        raise RiordanError(
            "no OEIS dump configured: pass --oeis PATH or set the "
            f"{OEIS_PATH_ENV} environment variable to a stripped file"
        )
    index = load_stripped(dump)
    if args.values:
        try:
            values = [int(part) for part in args.values.split(",")]
        except ValueError as err:
            raise RiordanError(
                f"bad --values: {err}; expected comma-separated integers"
            ) from err
        matches = index.identify_sequence(values)
    else:
        element = _resolve_element(args, _headroom(args.size))
        matrix = element.matrix(args.size)
        values = [c.numerator for row in matrix.lower_rows() for c in row]
        matches = index.identify_triangle(matrix)
    text = (
        "\n".join(f"{m.anumber} (offset {m.offset})" for m in matches)
        or "no matches"
    )
    doc = {
        "values": values,
        "matches": [{"anumber": m.anumber, "offset": m.offset} for m in matches],
    }
    _emit(doc, text, args.json)
    return EXIT_OK


def _cmd_family(args: argparse.Namespace) -> int:
    steps = args.iterate if args.iterate is not None else 0
    if steps < 0:
        raise RiordanError("--iterate must be non-negative")
    order = _headroom(args.size) + steps
    element = family_element(args.name, order)
    matrix = element.matrix(args.size)
    p = production_matrix(element, args.size)
    doc = {
        "name": args.name,
        "size": args.size,
        "matrix": matrix.to_json_entries(),
        "production_matrix": p.to_json_entries(),
    }
    blocks = [matrix.to_text(), "production matrix:", p.to_text()]
    if args.name.startswith("moment:"):
        rows = orthogonal_polys(Fraction(args.name.split(":", 1)[1]), args.size)
        doc["polynomial_rows"] = [[str(c) for c in row.coeffs] for row in rows]
        blocks.append("orthogonal polynomial coefficient rows:")
        blocks.extend(
            "  ".join(str(c) for c in row.coeffs) for row in rows
        )
    if args.iterate is not None:
        chain = iterate_second_production(element, steps)
        doc["iterates"] = []
        blocks.append(f"iterated second-production chain ({steps} steps):")
        for j, stage in enumerate(chain):
            inv = stage.inverse()
            doc["iterates"].append(
                {
                    "g": [str(c) for c in stage.g.coefficients],
                    "f": [str(c) for c in stage.f.coefficients],
                    "inverse_g": [str(c) for c in inv.g.coefficients],
                    "inverse_f": [str(c) for c in inv.f.coefficients],
                }
            )
            blocks.append(f"step {j}:")
            blocks.append(f"  g = {stage.g}")
            blocks.append(f"  f = {stage.f}")
            blocks.append(f"  inverse g = {inv.g}")
            blocks.append(f"  inverse f = {inv.f}")
    _emit(doc, "\n".join(blocks), args.json)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------

def _add_element_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--g", help="generating-function expression for g")
    sub.add_argument("--f", help="generating-function expression for f")
    sub.add_argument(
        "--family",
        help=f"named element: {', '.join(FAMILY_NAMES)}",
    )


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--size", type=int, default=DEFAULT_SIZE, help="rows to compute (default 8)")
    sub.add_argument("--json", action="store_true", help="emit a JSON document")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riordan",
        description="Exact Riordan-array computations: matrices, production "
        "matrices of any order, closed-form checks and OEIS lookup.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    show = commands.add_parser("show", help="print the matrix of an element")
    _add_element_options(show)
    _add_common(show)
    show.set_defaults(handler=_cmd_show)

    prod = commands.add_parser("prod", help="print an n-th production matrix")
    _add_element_options(prod)
    _add_common(prod)
    prod.add_argument("--n", type=int, default=1, help="production order (default 1)")
    prod.set_defaults(handler=_cmd_prod)

    verify = commands.add_parser(
        "verify",
        help="compare generated matrices against their closed forms",
    )
    _add_element_options(verify)
    _add_common(verify)
    verify.add_argument(
        "--n", default="2", help="production order, a single value or a range like 2..4"
    )
    verify.set_defaults(handler=_cmd_verify)

    identify = commands.add_parser(
        "identify", help="look up a triangle or sequence in a local OEIS dump"
    )
    _add_element_options(identify)
    _add_common(identify)
    identify.add_argument("--values", help="comma-separated integers to look up directly")
    identify.add_argument("--oeis", help="path to an OEIS 'stripped' file")
    identify.set_defaults(handler=_cmd_identify)

    family = commands.add_parser(
        "family", help="print a named family with its production matrix"
    )
    family.add_argument("name", help=f"one of: {', '.join(FAMILY_NAMES)}")
    _add_common(family)
    family.add_argument(
        "--iterate",
        type=int,
        help="also run this many steps of the iterated second-production process",
    )
    family.set_defaults(handler=_cmd_family)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "size", 1) < 1:
            raise RiordanError("--size must be at least 1")
        return args.handler(args)
    except RiordanError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ERROR


def entry_point() -> None:
    sys.exit(main())
