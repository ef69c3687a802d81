"""Digit-by-digit r-th roots using only addition, subtraction and decimal shifts."""

from .bignat import BigNat
from .cbrt import cbrt_digits_quint, cbrt_digits_subtractive
from .groups import GroupStream, ParseError, parse_input, place_radix
from .metaroot import root_digits, root_digits_float
from .sqrt import sqrt_digits_pair, sqrt_digits_subtractive

__all__ = [
    "BigNat",
    "GroupStream",
    "ParseError",
    "parse_input",
    "place_radix",
    "sqrt_digits_pair",
    "sqrt_digits_subtractive",
    "cbrt_digits_quint",
    "cbrt_digits_subtractive",
    "root_digits",
    "root_digits_float",
]

__version__ = "0.1.0"
