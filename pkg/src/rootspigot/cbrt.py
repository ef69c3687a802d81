"""Cube-root digit spigots.

Both machines subtract ``f(k) = 3k**2 + 3k + 1`` from the remainder for
``k = 10*prefix, 10*prefix + 1, ...`` and count the subtractions.

The quintuple machine keeps ``<M, D, R, S, W>`` with ``W = f(R)`` and
``S = 6R``:

    A (M >= W):  <M - W, D + 1, R + 1, S + 6, W + S + 6>
    B (M < W):   <1000M + g, 0, 10R, 10S, 100W - 270R - 99>, digit D

so the inner loop is additions only.  The subtractive machine gets the same
subtrahends from a running square of ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator

from .bignat import ONE, ZERO, BigNat, add, cmp, from_int, mul_small, shl10, sub
from .errors import DigitOverflow, GuardViolation
from .groups import GroupStream
from .trace import TraceFn

__all__ = [
    "QuintState",
    "SubtractiveCbrtState",
    "quint_init",
    "quint_rule_a",
    "quint_rule_b",
    "iter_cbrt_quint",
    "cbrt_digits_quint",
    "iter_cbrt_subtractive",
    "cbrt_digits_subtractive",
]

_SIX = from_int(6)
_NINETY_NINE = from_int(99)


def _require_cubic(groups: GroupStream) -> None:
    if groups.degree != 3:
        raise ValueError(f"expected a degree-3 group stream, got degree {groups.degree}")


@dataclass(frozen=True)
class QuintState:
    M: BigNat
    D: int
    R: BigNat
    S: BigNat
    W: BigNat

    def trace_fields(self):
        return [("M", self.M), ("D", self.D), ("R", self.R), ("S", self.S), ("W", self.W)]

    def check(self) -> None:
        r = int(self.R)
        assert int(self.W) == 3 * r * r + 3 * r + 1, f"W != 3R^2 + 3R + 1 at R={r}"
        assert int(self.S) == 6 * r, f"S != 6R at R={r}"


def quint_init(groups: GroupStream) -> QuintState:
    _require_cubic(groups)
    return QuintState(from_int(groups.group(0)), 0, ZERO, ZERO, ONE)


def quint_rule_a(s: QuintState) -> QuintState:
    if cmp(s.M, s.W) < 0:
        raise GuardViolation(f"rule A needs M >= W, got M={s.M} W={s.W}")
    s2 = add(s.S, _SIX)
    return QuintState(sub(s.M, s.W), s.D + 1, add(s.R, ONE), s2, add(s.W, s2))


def quint_rule_b(s: QuintState, next_group: int | None = None) -> tuple[QuintState, int]:
    if cmp(s.M, s.W) >= 0:
        raise GuardViolation(f"rule B needs M < W, got M={s.M} W={s.W}")
    m = shl10(s.M, 3)
    if next_group:
        m = add(m, from_int(next_group))
    w = sub(sub(shl10(s.W, 2), mul_small(s.R, 270)), _NINETY_NINE)
    return QuintState(m, 0, shl10(s.R, 1), shl10(s.S, 1), w), s.D


def iter_cbrt_quint(
    groups: GroupStream, trace: TraceFn | None = None, check: bool = False
) -> Iterator[int]:
    s = quint_init(groups)
    i = 1
    while True:
        while cmp(s.M, s.W) >= 0:
            if trace:
                trace("A", s)
            s = quint_rule_a(s)
            if check:
                s.check()
        if s.D > 9:
            raise DigitOverflow(f"{s.D} applications of rule A in one group")
        if trace:
            trace("B", s)
        s, digit = quint_rule_b(s, groups.group(i))
        i += 1
        if check:
            s.check()
        yield digit


def cbrt_digits_quint(
    groups: GroupStream, n: int, trace: TraceFn | None = None, check: bool = False
) -> list[int]:
    if n < 1:
        raise ValueError("digit count must be at least 1")
    return list(islice(iter_cbrt_quint(groups, trace, check), n))


@dataclass(frozen=True)
class SubtractiveCbrtState:
    remainder: BigNat
    k: BigNat
    prefix: BigNat
    digit_count: int
    f: BigNat  # 3k^2 + 3k + 1
    square: BigNat  # k^2

    def trace_fields(self):
        return [("rem", self.remainder), ("k", self.k), ("f", self.f)]

    def check(self) -> None:
        k = int(self.k)
        assert int(self.f) == 3 * k * k + 3 * k + 1, f"subtrahend out of step at k={k}"
        assert int(self.square) == k * k


def _subtrahend(k: BigNat, square: BigNat) -> BigNat:
    return add(add(mul_small(square, 3), mul_small(k, 3)), ONE)


def iter_cbrt_subtractive(
    groups: GroupStream,
    trace: TraceFn | None = None,
    direct: bool = False,
    check: bool = False,
) -> Iterator[int]:
    """Digits of the cube root by direct subtraction.

    With ``direct=True`` every subtrahend is recomputed from scratch by the
    general ``eval_f`` instead of the running square, for differential runs.
    """
    _require_cubic(groups)
    if direct:
        from .metaroot import eval_f

        def subtrahend(k, square):
            return eval_f(3, k)
    else:
        subtrahend = _subtrahend

    s = SubtractiveCbrtState(from_int(groups.group(0)), ZERO, ZERO, 0, ONE, ZERO)
    i = 1
    while True:
        while cmp(s.remainder, s.f) >= 0:
            if trace:
                trace("A", s)
            k = add(s.k, ONE)
            # (k + 1)^2 = k^2 + 2k + 1
            square = add(add(s.square, mul_small(s.k, 2)), ONE)
            s = SubtractiveCbrtState(
                sub(s.remainder, s.f), k, s.prefix, s.digit_count + 1, subtrahend(k, square), square
            )
            if check:
                s.check()
        digit = s.digit_count
        if digit > 9:
            raise DigitOverflow(f"{digit} subtractions in one group")
        if trace:
            trace("B", s)
        rem = shl10(s.remainder, 3)
        g = groups.group(i)
        if g:
            rem = add(rem, from_int(g))
        k = shl10(s.k, 1)
        square = shl10(s.square, 2)
        s = SubtractiveCbrtState(rem, k, s.k, 0, subtrahend(k, square), square)
        if check:
            s.check()
        i += 1
        yield digit


def cbrt_digits_subtractive(
    groups: GroupStream,
    n: int,
    trace: TraceFn | None = None,
    direct: bool = False,
    check: bool = False,
) -> list[int]:
    if n < 1:
        raise ValueError("digit count must be at least 1")
    return list(islice(iter_cbrt_subtractive(groups, trace, direct, check), n))
