"""``root`` command: stream the digits of an r-th root.

    root [--degree R] [--digits N] [--variant pair|subtractive|quint|meta|float]
         [--trace] [--json] M

Exit status: 0 on success, 2 for usage or parse errors, 3 when float mode
ran out of precision before N digits.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from dataclasses import dataclass
from itertools import islice
from typing import Iterator, TextIO

from .cbrt import iter_cbrt_quint, iter_cbrt_subtractive
from .errors import PrecisionWarning
from .groups import GroupStream, ParseError, parse_input, place_radix
from .metaroot import R_MAX, iter_root_digits, root_digits_float
from .sqrt import iter_sqrt_pair, iter_sqrt_subtractive
from .trace import format_step

__all__ = ["RootRequest", "UsageError", "default_variant", "run", "main", "EXIT_OK", "EXIT_USAGE", "EXIT_PRECISION"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECISION = 3
SCHEMA_VERSION = 1

VARIANTS = ("pair", "subtractive", "quint", "meta", "float")
_ALLOWED = {
    "pair": lambda r: r == 2,
    "subtractive": lambda r: r in (2, 3),
    "quint": lambda r: r == 3,
    "meta": lambda r: 2 <= r <= R_MAX,
}


class UsageError(ValueError):
    pass


@dataclass
class RootRequest:
    degree: int | float
    literal: str
    digits: int = 50
    variant: str | None = None
    trace: bool = False
    json: bool = False

    def resolved_variant(self) -> str:
        variant = self.variant or default_variant(self.degree)
        if variant == "float":
            if not self.degree > 1:
                raise UsageError("float mode needs a degree greater than 1")
        elif not isinstance(self.degree, int) or not _ALLOWED[variant](self.degree):
            raise UsageError(f"variant {variant!r} does not support degree {self.degree}")
        return variant

    def validate(self) -> str:
        if self.digits < 1:
            raise UsageError("--digits must be at least 1")
        variant = self.resolved_variant()
        if self.trace and self.json:
            raise UsageError("--trace and --json are mutually exclusive")
        return variant


def default_variant(degree: int | float) -> str:
    if not isinstance(degree, int):
        return "float"
    return {2: "pair", 3: "quint"}.get(degree, "meta")


def _parse_degree(text: str) -> int | float:
    try:
        return int(text)
    except ValueError:
        pass
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid degree: {text!r}")
    return int(value) if value.is_integer() else value


def _digit_iter(variant: str, degree: int, groups: GroupStream, trace) -> Iterator[int]:
    if variant == "pair":
        return iter_sqrt_pair(groups, trace)
    if variant == "subtractive":
        make = iter_sqrt_subtractive if degree == 2 else iter_cbrt_subtractive
        return make(groups, trace)
    if variant == "quint":
        return iter_cbrt_quint(groups, trace)
    return iter_root_digits(degree, groups, trace)


def _groups_doc(groups: GroupStream | None) -> dict | None:
    if groups is None:
        return None
    return {
        "integer": list(groups.integer_groups),
        "fraction": list(groups.fraction_groups),
        "int_group_count": groups.int_group_count,
    }


def _document(req: RootRequest, variant: str, digits: list[int], g: int, groups) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "degree": req.degree,
        "input": req.literal,
        "variant": variant,
        "digits": "".join(map(str, digits)),
        "radix_string": place_radix(digits, g),
        "groups": _groups_doc(groups),
    }


def _run_float(req: RootRequest, out: TextIO, err: TextIO) -> int:
    try:
        m = float(req.literal)
    except ValueError:
        raise UsageError(f"malformed radicand {req.literal!r}")
    if not m > 0:
        raise UsageError("float mode needs a positive radicand")
    step = 0

    def emit(rule, state):
        nonlocal step
        step += 1
        out.write(format_step(step, rule, state) + "\n")

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", PrecisionWarning)
        result = root_digits_float(float(req.degree), m, req.digits, emit if req.trace else None)
    for w in caught:
        err.write(f"warning: {w.message}\n")
    if req.json:
        doc = _document(req, "float", result.digits, result.int_digits, None)
        doc["reliable_digits"] = result.reliable
        json.dump(doc, out)
        out.write("\n")
    else:
        out.write(place_radix(result.digits, result.int_digits) + "\n")
    return EXIT_PRECISION if result.truncated else EXIT_OK


def run(req: RootRequest, out: TextIO | None = None, err: TextIO | None = None) -> int:
    """Execute one request, writing digits to ``out`` as they are produced."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        variant = req.validate()
        if variant == "float":
            return _run_float(req, out, err)
        groups = parse_input(req.literal, req.degree)
    except (UsageError, ParseError) as exc:
        err.write(f"root: error: {exc}\n")
        return EXIT_USAGE

    g = groups.int_group_count
    step = 0

    def emit(rule, state):
        nonlocal step
        step += 1
        out.write(format_step(step, rule, state) + "\n")

    digits_iter = islice(_digit_iter(variant, req.degree, groups, emit if req.trace else None), req.digits)

    if req.json:
        json.dump(_document(req, variant, list(digits_iter), g, groups), out)
        out.write("\n")
        return EXIT_OK
    if req.trace:
        digits = list(digits_iter)
        out.write(place_radix(digits, g) + "\n")
        return EXIT_OK

    for i, d in enumerate(digits_iter):
        if i == g:
            out.write(".")
        out.write(str(d))
        out.flush()
    out.write("\n")
    out.flush()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="root", description="Extract the digits of an r-th root one at a time."
    )
    parser.add_argument("M", help="non-negative decimal radicand, e.g. 7 or 234.56")
    parser.add_argument("--degree", "-r", type=_parse_degree, default=2,
                        help="root degree; non-integer values select float mode (default 2)")
    parser.add_argument("--digits", "-n", type=int, default=50, help="number of digits (default 50)")
    parser.add_argument("--variant", choices=VARIANTS,
                        help="machine to run (default: pair for r=2, quint for r=3, meta otherwise)")
    parser.add_argument("--trace", action="store_true", help="print one STEP line per rule application")
    parser.add_argument("--json", action="store_true", help="print a single JSON document")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    req = RootRequest(args.degree, args.M, args.digits, args.variant, args.trace, args.json)
    try:
        return run(req)
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
