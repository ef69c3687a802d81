"""Radicand digit groups and radix placement."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = ["ParseError", "GroupStream", "parse_input", "place_radix"]

_LITERAL_RE = re.compile(r"(?P<int>[0-9]*)(?:\.(?P<frac>[0-9]*))?")


class ParseError(ValueError):
    """Malformed or unsupported radicand literal."""


@dataclass(frozen=True)
class GroupStream:
    """A radicand split into ``degree``-digit groups anchored at the radix point.

    Integer groups are counted from the right of the integer part, so the
    leading group may be short.  Fraction groups are right-padded with
    zeros.  Past the end of the fraction the stream yields zero groups
    forever.
    """

    degree: int
    integer_groups: tuple[int, ...]
    fraction_groups: tuple[int, ...] = ()

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be positive")
        if not self.integer_groups:
            raise ValueError("at least one integer group is required")
        limit = 10**self.degree
        for g in self.integer_groups + self.fraction_groups:
            if not 0 <= g < limit:
                raise ValueError(f"group {g} does not fit {self.degree} digits")

    @property
    def int_group_count(self) -> int:
        return len(self.integer_groups)

    def group(self, i: int) -> int:
        """The i-th group (0 = leading); zero beyond the given digits."""
        if i < len(self.integer_groups):
            return self.integer_groups[i]
        i -= len(self.integer_groups)
        if i < len(self.fraction_groups):
            return self.fraction_groups[i]
        return 0

    def __iter__(self) -> Iterator[int]:
        i = 0
        while True:
            yield self.group(i)
            i += 1

    def digits(self) -> tuple[str, str]:
        """Zero-padded integer and fraction digit strings."""
        r = self.degree
        return (
            "".join(str(g).zfill(r) for g in self.integer_groups),
            "".join(str(g).zfill(r) for g in self.fraction_groups),
        )

    @classmethod
    def of(cls, m: int | str, degree: int) -> "GroupStream":
        return parse_input(str(m), degree)


def parse_input(s: str, r: int) -> GroupStream:
    s = s.strip()
    if s.startswith("-"):
        raise ParseError(f"negative radicand {s!r}: only non-negative inputs have real roots here")
    if s.startswith("+"):
        s = s[1:]
    match = _LITERAL_RE.fullmatch(s)
    if match is None or not (match["int"] or match["frac"]):
        raise ParseError(f"malformed decimal literal {s!r}")
    int_part = match["int"].lstrip("0") or "0"
    frac_part = (match["frac"] or "").rstrip("0")

    lead = len(int_part) % r
    int_groups = []
    if lead:
        int_groups.append(int(int_part[:lead]))
    int_groups.extend(int(int_part[i:i + r]) for i in range(lead, len(int_part), r))

    if frac_part:
        frac_part = frac_part.ljust(-(-len(frac_part) // r) * r, "0")
    frac_groups = [int(frac_part[i:i + r]) for i in range(0, len(frac_part), r)]
    return GroupStream(r, tuple(int_groups), tuple(frac_groups))


def place_radix(digits: Sequence[int], int_group_count: int) -> str:
    """Join digits, putting the point after one digit per integer group.

    Nothing is rounded.  If there are no more digits than integer groups the
    result is the bare digit string.
    """
    text = "".join(str(d) for d in digits)
    if len(text) <= int_group_count:
        return text
    return f"{text[:int_group_count]}.{text[int_group_count:]}"
