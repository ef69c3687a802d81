"""Square-root digit spigots.

Two interchangeable machines produce the same digits:

* the pair machine on ``<P, Q>``, started at ``<5M, 5>``.  Rule A turns
  ``<P, Q>`` into ``<P - Q, Q + 10>`` while ``P >= Q``; Rule B turns it into
  ``<100P, 10Q - 45>`` once ``P < Q``.  The number of A steps between two
  B steps is the next digit.
* the subtractive form, which removes the odd numbers ``2k + 1`` from the
  remainder for ``k = 10*prefix, 10*prefix + 1, ...`` until the next one
  no longer fits.

The pair machine is the subtractive form scaled by five, so ``P`` is five
times the remainder and ``Q`` five times the current odd number.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator

from .bignat import BigNat, ONE, ZERO, add, cmp, from_int, mul_small, shl10, sub
from .errors import DigitOverflow, GuardViolation
from .groups import GroupStream
from .trace import TraceFn

__all__ = [
    "PairState",
    "SubtractiveSqrtState",
    "pair_init",
    "pair_rule_a",
    "pair_rule_b",
    "iter_sqrt_pair",
    "sqrt_digits_pair",
    "subtractive_init",
    "subtractive_step",
    "subtractive_advance",
    "iter_sqrt_subtractive",
    "sqrt_digits_subtractive",
]

_TWO = from_int(2)
_FIVE = from_int(5)
_NINE = from_int(9)
_TEN = from_int(10)
_FORTY_FIVE = from_int(45)


def _require_degree(groups: GroupStream, r: int) -> None:
    if groups.degree != r:
        raise ValueError(f"expected a degree-{r} group stream, got degree {groups.degree}")


@dataclass(frozen=True)
class PairState:
    P: BigNat
    Q: BigNat

    def trace_fields(self):
        return [("P", self.P), ("Q", self.Q)]

    def check(self) -> None:
        # limbs are base 10**9, so the low limb carries both residues
        p0 = self.P.limbs[0] if self.P.limbs else 0
        q0 = self.Q.limbs[0] if self.Q.limbs else 0
        assert q0 % 10 == 5, f"Q={self.Q} does not end in 5"
        assert p0 % 5 == 0, f"P={self.P} is not a multiple of 5"


def pair_init(groups: GroupStream) -> PairState:
    _require_degree(groups, 2)
    return PairState(mul_small(from_int(groups.group(0)), 5), _FIVE)


def pair_rule_a(s: PairState) -> PairState:
    if cmp(s.P, s.Q) < 0:
        raise GuardViolation(f"rule A needs P >= Q, got <{s.P}, {s.Q}>")
    return PairState(sub(s.P, s.Q), add(s.Q, _TEN))


def pair_rule_b(s: PairState, next_group: int | None = None) -> PairState:
    """``<100P + 5g, 10Q - 45>``; ``g`` is the next two-digit group (0 when absent)."""
    if cmp(s.P, s.Q) >= 0:
        raise GuardViolation(f"rule B needs P < Q, got <{s.P}, {s.Q}>")
    p = shl10(s.P, 2)
    if next_group:
        p = add(p, mul_small(from_int(next_group), 5))
    return PairState(p, sub(shl10(s.Q, 1), _FORTY_FIVE))


def iter_sqrt_pair(
    groups: GroupStream, trace: TraceFn | None = None, check: bool = False
) -> Iterator[int]:
    """Yield the digits of sqrt(M) forever."""
    s = pair_init(groups)
    i = 1
    while True:
        count = 0
        while cmp(s.P, s.Q) >= 0:
            if trace:
                trace("A", s)
            s = pair_rule_a(s)
            count += 1
            if check:
                s.check()
        if count > 9:
            raise DigitOverflow(f"{count} applications of rule A in one group")
        if trace:
            trace("B", s)
        s = pair_rule_b(s, groups.group(i))
        i += 1
        if check:
            s.check()
        yield count


def sqrt_digits_pair(
    groups: GroupStream, n: int, trace: TraceFn | None = None, check: bool = False
) -> list[int]:
    if n < 1:
        raise ValueError("digit count must be at least 1")
    return list(islice(iter_sqrt_pair(groups, trace, check), n))


@dataclass(frozen=True)
class SubtractiveSqrtState:
    remainder: BigNat
    odd_term: BigNat
    digit_count: int
    prefix: BigNat

    @property
    def k(self) -> BigNat:
        return add(shl10(self.prefix, 1), from_int(self.digit_count))

    def trace_fields(self):
        return [("rem", self.remainder), ("k", self.k), ("f", self.odd_term)]

    def check(self) -> None:
        assert self.odd_term == add(mul_small(self.k, 2), ONE), "odd_term != 2k + 1"


def subtractive_init(groups: GroupStream) -> SubtractiveSqrtState:
    _require_degree(groups, 2)
    return SubtractiveSqrtState(from_int(groups.group(0)), ONE, 0, ZERO)


def subtractive_step(s: SubtractiveSqrtState) -> SubtractiveSqrtState:
    if cmp(s.remainder, s.odd_term) < 0:
        raise GuardViolation(f"cannot subtract {s.odd_term} from {s.remainder}")
    return SubtractiveSqrtState(
        sub(s.remainder, s.odd_term), add(s.odd_term, _TWO), s.digit_count + 1, s.prefix
    )


def subtractive_advance(s: SubtractiveSqrtState, next_group: int | None = None) -> SubtractiveSqrtState:
    """Close the current group: append the digit and bring down the next group."""
    if cmp(s.remainder, s.odd_term) >= 0:
        raise GuardViolation(f"group not finished: {s.remainder} >= {s.odd_term}")
    rem = shl10(s.remainder, 2)
    if next_group:
        rem = add(rem, from_int(next_group))
    prefix = add(shl10(s.prefix, 1), from_int(s.digit_count))
    # 2(10p + j) + 1 -> 2(10(10p + j)) + 1
    odd = sub(shl10(s.odd_term, 1), _NINE)
    return SubtractiveSqrtState(rem, odd, 0, prefix)


def iter_sqrt_subtractive(
    groups: GroupStream, trace: TraceFn | None = None, check: bool = False
) -> Iterator[int]:
    s = subtractive_init(groups)
    i = 1
    while True:
        while cmp(s.remainder, s.odd_term) >= 0:
            if trace:
                trace("A", s)
            s = subtractive_step(s)
            if check:
                s.check()
        digit = s.digit_count
        if digit > 9:
            raise DigitOverflow(f"{digit} subtractions in one group")
        if trace:
            trace("B", s)
        s = subtractive_advance(s, groups.group(i))
        i += 1
        if check:
            s.check()
        yield digit


def sqrt_digits_subtractive(
    groups: GroupStream, n: int, trace: TraceFn | None = None, check: bool = False
) -> list[int]:
    """Digits of sqrt(M) by plain subtraction of odd numbers.

    Pass a ``trace.Recorder`` to get at the remainders; its ``before_b()``
    states hold the remainder left at the end of each group.
    """
    if n < 1:
        raise ValueError("digit count must be at least 1")
    return list(islice(iter_sqrt_subtractive(groups, trace, check), n))
