"""General r-th root digit spigot.

For each digit the machine subtracts ``f(k) = (k + 1)**r - k**r`` from the
remainder for ascending ``k``, counting the subtractions, until the next
``f(k)`` no longer fits.  The count is the digit; the remainder is then
shifted by ``10**r`` with the next digit group appended, and ``k`` moves to
``10 * k``.  Over a digit window the subtracted values telescope to
``(10D + d)**r - (10D)**r``.

``f(k)`` is never evaluated inside a digit: a forward-difference table
``[f(k), Δf(k), ..., Δ**(r-1) f(k)]`` yields ``f(k + 1)`` with r - 1
additions.  At a group boundary the table is rebuilt at ``10 * k`` from
the powers of the digit prefix, using shifts and word-sized scalar
products only.  Past r = 18 those scalars no longer fit a word and the
table is rebuilt from direct evaluations of ``f`` instead.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import islice
from typing import Iterator, Sequence

from . import oracle
from .bignat import (
    MAX_SCALAR,
    ONE,
    ZERO,
    BigNat,
    add,
    cmp,
    from_int,
    mul_small,
    shl10,
    sub,
)
from .errors import DigitOverflow, PrecisionWarning
from .groups import GroupStream
from .trace import TraceFn

__all__ = [
    "R_MAX",
    "HEADROOM_DIGITS",
    "BinomialRow",
    "MetaState",
    "FloatState",
    "FloatRoot",
    "binomial_row",
    "eval_f",
    "build_diff_table",
    "step_diff_table",
    "iter_root_digits",
    "root_digits",
    "root_digits_float",
]

R_MAX = 64
HEADROOM_DIGITS = 3


def _check_degree(r: int) -> None:
    if not isinstance(r, int) or r < 2:
        raise ValueError(f"degree must be an integer >= 2, got {r!r}")
    if r > R_MAX:
        raise ValueError(f"degree {r} exceeds the supported maximum {R_MAX}")


@dataclass(frozen=True)
class BinomialRow:
    """``C(r, 1), ..., C(r, r)``: the coefficients of ``f`` from ``k**(r-1)`` down."""

    r: int
    coeffs: tuple[BigNat, ...]


@lru_cache(maxsize=None)
def binomial_row(r: int) -> BinomialRow:
    _check_degree(r)
    # Pascal's rule, additions only
    row = [ONE]
    for _ in range(r):
        row = [ONE] + [add(row[i], row[i + 1]) for i in range(len(row) - 1)] + [ONE]
    return BinomialRow(r, tuple(row[1:]))


def eval_f(r: int, k: BigNat) -> BigNat:
    """Direct evaluation of ``(k + 1)**r - k**r`` by Horner's rule.

    Multiplies through the oracle, so it is only used for table setup
    checks and tests, never inside a digit loop.
    """
    acc = ZERO
    for c in binomial_row(r).coeffs:
        acc = add(oracle.mul(acc, k), c)
    return acc


def build_diff_table(r: int, k0: BigNat) -> list[BigNat]:
    values = [eval_f(r, add(k0, from_int(i))) for i in range(r)]
    table = []
    for _ in range(r):
        table.append(values[0])
        values = [sub(b, a) for a, b in zip(values, values[1:])]
    return table


def step_diff_table(t: Sequence[BigNat]) -> list[BigNat]:
    """Advance a forward-difference table from k to k + 1."""
    # ascending order reads each t[i + 1] before it is updated
    out = list(t)
    for i in range(len(out) - 1):
        out[i] = add(out[i], out[i + 1])
    return out


@lru_cache(maxsize=None)
def _rescale_plan(r: int):
    """Integer constants for rebuilding the table at K = 10 * D.

    ``f(K + i) = sum_a K**a * c[a](i)`` with ``c[a](i) = sum_m C(r, m) C(m, a) i**(m-a)``
    over m < r, hence ``Δ**j f(K) = sum_a (10**a D**a) * Δ**j c[a](0)``.
    Returns ``(table_coeffs, power_coeffs)`` or None if any constant
    exceeds a machine word.
    """
    binom = math.comb
    # (10D + d)**m = sum_a C(m, a) d**(m-a) 10**a D**a
    power_coeffs = [
        [[binom(m, a) * d ** (m - a) for a in range(m + 1)] for m in range(r)] for d in range(10)
    ]
    if max(x for per_d in power_coeffs for row in per_d for x in row) > MAX_SCALAR:
        return None

    def c(a, i):
        return sum(binom(r, m) * binom(m, a) * i ** (m - a) for m in range(a, r))

    values = [[c(a, i) for i in range(r)] for a in range(r)]
    table_coeffs = [
        [sum((-1) ** (j - t) * binom(j, t) * values[a][t] for t in range(j + 1)) for a in range(r)]
        for j in range(r)
    ]
    if max(max(row) for row in table_coeffs) > MAX_SCALAR:
        return None
    return table_coeffs, power_coeffs


def _table_at_scaled(r: int, powers: Sequence[BigNat]) -> list[BigNat]:
    table_coeffs, _ = _rescale_plan(r)
    table = []
    for coeffs in table_coeffs:
        acc = ZERO
        for a, c in enumerate(coeffs):
            if c and powers[a]:
                acc = add(acc, shl10(mul_small(powers[a], c), a))
        table.append(acc)
    return table


def _advance_powers(r: int, powers: Sequence[BigNat], d: int) -> list[BigNat]:
    _, power_coeffs = _rescale_plan(r)
    out = []
    for m, coeffs in enumerate(power_coeffs[d]):
        acc = ZERO
        for a, c in enumerate(coeffs):
            if c and powers[a]:
                acc = add(acc, shl10(mul_small(powers[a], c), a))
        out.append(acc)
    return out


@dataclass(frozen=True)
class MetaState:
    remainder: BigNat
    k: BigNat
    r: int
    diff_table: tuple[BigNat, ...]
    group_digit: int

    def trace_fields(self):
        return [("rem", self.remainder), ("k", self.k), ("f", self.diff_table[0])]

    def check(self) -> None:
        assert self.diff_table[0] == eval_f(self.r, self.k), f"table out of step at k={self.k}"
        assert int(self.diff_table[-1]) == math.factorial(self.r), "top difference is not r!"


def iter_root_digits(
    r: int, groups: GroupStream, trace: TraceFn | None = None, check: bool = False
) -> Iterator[int]:
    _check_degree(r)
    if groups.degree != r:
        raise ValueError(f"expected a degree-{r} group stream, got degree {groups.degree}")
    fast = _rescale_plan(r) is not None

    k = ZERO
    powers = [ONE] + [ZERO] * (r - 1)  # powers of the digit prefix D, with k = 10 * D
    table = _table_at_scaled(r, powers) if fast else build_diff_table(r, k)
    remainder = from_int(groups.group(0))
    i = 1
    while True:
        j = 0
        while cmp(remainder, table[0]) >= 0:
            if trace or check:
                state = MetaState(remainder, k, r, tuple(table), j)
                if check:
                    state.check()
                if trace:
                    trace("A", state)
            remainder = sub(remainder, table[0])
            table = step_diff_table(table)
            k = add(k, ONE)
            j += 1
        if j > 9:
            raise DigitOverflow(f"{j} subtractions in one group")
        if trace or check:
            state = MetaState(remainder, k, r, tuple(table), j)
            if check:
                state.check()
            if trace:
                trace("B", state)
        k = shl10(k, 1)
        if fast:
            powers = _advance_powers(r, powers, j)
            table = _table_at_scaled(r, powers)
        else:
            table = build_diff_table(r, k)
        remainder = shl10(remainder, r)
        g = groups.group(i)
        if g:
            remainder = add(remainder, from_int(g))
        i += 1
        yield j


def root_digits(
    r: int, groups: GroupStream, n: int, trace: TraceFn | None = None, check: bool = False
) -> list[int]:
    """First ``n`` digits of the r-th root; the caller places the radix point."""
    if n < 1:
        raise ValueError("digit count must be at least 1")
    return list(islice(iter_root_digits(r, groups, trace, check), n))


@dataclass(frozen=True)
class FloatState:
    remainder: float
    k: int
    f: float

    def trace_fields(self):
        return [("rem", repr(self.remainder)), ("k", self.k), ("f", repr(self.f))]


@dataclass
class FloatRoot:
    digits: list[int]
    int_digits: int
    requested: int
    reliable: int
    headroom: list[float] = field(default_factory=list)

    @property
    def truncated(self) -> bool:
        return len(self.digits) < self.requested


def root_digits_float(
    alpha: float, m: float, n: int, trace: TraceFn | None = None
) -> FloatRoot:
    """Digits of ``m ** (1 / alpha)`` for real ``alpha > 1``, in double precision.

    The same subtract-and-count scheme with ``f(x) = (x + 1)**alpha - x**alpha``
    and a remainder scaled by ``10**alpha`` per digit.  A running bound on
    the accumulated rounding error is kept; a digit is only emitted while
    every comparison in its group clears that bound and the subtrahend
    still exceeds it by ``HEADROOM_DIGITS`` orders of magnitude.  When that
    fails the result is cut short and a ``PrecisionWarning`` is issued.
    """
    alpha = float(alpha)
    m = float(m)
    if not alpha > 1.0:
        raise ValueError("alpha must exceed 1")
    if not (m > 0.0 and math.isfinite(m)):
        raise ValueError("radicand must be positive and finite")
    if n < 1:
        raise ValueError("digit count must be at least 1")

    scale = 10.0**alpha
    scale_rel = 2 * math.ulp(scale) / scale
    err = math.ulp(m)
    shifts = 0
    while m >= scale:
        m /= scale
        shifts += 1
        err = err / scale + math.ulp(m) + m * scale_rel
    int_digits = shifts + 1

    rem = m
    k = 0
    digits: list[int] = []
    headroom: list[float] = []
    while len(digits) < n:
        j = 0
        ok = True
        while True:
            hi = (k + 1) ** alpha
            lo = k**alpha
            fk = hi - lo
            ferr = math.ulp(hi) + math.ulp(lo) + math.ulp(fk)
            bound = err + ferr
            if abs(rem - fk) <= bound:
                ok = False
            if rem < fk:
                break
            if trace:
                trace("A", FloatState(rem, k, fk))
            rem -= fk
            err += ferr + math.ulp(rem)
            k += 1
            j += 1
        room = math.log10(fk / bound) if bound > 0 else math.inf
        if not ok or room < HEADROOM_DIGITS or j > 9:
            break
        if trace:
            trace("B", FloatState(rem, k, fk))
        digits.append(j)
        headroom.append(room)
        rem *= scale
        err = err * scale + abs(rem) * scale_rel + math.ulp(rem)
        k *= 10

    result = FloatRoot(digits, int_digits, n, len(digits), headroom)
    if result.truncated:
        warnings.warn(
            f"float mode kept only {len(digits)} of {n} digits reliable "
            f"(double precision exhausted)",
            PrecisionWarning,
            stacklevel=2,
        )
    return result
