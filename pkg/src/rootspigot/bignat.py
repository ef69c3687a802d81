"""Non-negative big integers stored in decimal limbs.

Only the operations the root machines need are provided: add, subtract,
compare, shift by a power of ten and multiply by a word-sized scalar.
There is deliberately no BigNat x BigNat product here; the oracle module
keeps its own.
"""

from __future__ import annotations

import re

__all__ = [
    "BigNat",
    "BigNatUnderflow",
    "LIMB_DIGITS",
    "LIMB_BASE",
    "MAX_SCALAR",
    "ZERO",
    "ONE",
    "add",
    "sub",
    "checked_sub",
    "cmp",
    "shl10",
    "mul_small",
    "from_decimal",
    "to_decimal",
    "from_int",
]

# 9 digits per limb: (10**9 - 1) * 270 + carry fits a 64-bit word, which
# covers every scalar the sqrt/cbrt machines use.  mul_small accepts any
# 64-bit scalar; the per-limb product then needs at most 94 bits.
LIMB_DIGITS = 9
LIMB_BASE = 10**LIMB_DIGITS
MAX_SCALAR = 2**64 - 1

_DIGITS_RE = re.compile(r"[0-9]+")


class BigNatUnderflow(ArithmeticError):
    """Raised by sub() when the subtrahend exceeds the minuend."""


class BigNat:
    """Immutable non-negative integer, limbs least-significant first.

    Zero is the empty limb tuple; no other value carries a trailing zero limb.
    """

    __slots__ = ("limbs",)

    def __init__(self, limbs=()):
        limbs = tuple(limbs)
        for limb in limbs:
            if not 0 <= limb < LIMB_BASE:
                raise ValueError(f"limb out of range: {limb!r}")
        object.__setattr__(self, "limbs", _trim(list(limbs)))

    @classmethod
    def _raw(cls, limbs: tuple) -> "BigNat":
        # caller guarantees canonical limbs
        obj = object.__new__(cls)
        object.__setattr__(obj, "limbs", limbs)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("BigNat is immutable")

    def __bool__(self):
        return bool(self.limbs)

    def __len__(self):
        """Number of decimal digits (0 has one digit)."""
        if not self.limbs:
            return 1
        return LIMB_DIGITS * (len(self.limbs) - 1) + len(str(self.limbs[-1]))

    def __int__(self):
        value = 0
        for limb in reversed(self.limbs):
            value = value * LIMB_BASE + limb
        return value

    __index__ = __int__

    def __str__(self):
        return to_decimal(self)

    def __repr__(self):
        return f"BigNat({to_decimal(self)})"

    def __hash__(self):
        return hash(self.limbs)

    def __eq__(self, other):
        if not isinstance(other, BigNat):
            return NotImplemented
        return self.limbs == other.limbs

    def __lt__(self, other):
        return cmp(self, other) < 0

    def __le__(self, other):
        return cmp(self, other) <= 0

    def __gt__(self, other):
        return cmp(self, other) > 0

    def __ge__(self, other):
        return cmp(self, other) >= 0

    def __add__(self, other):
        if not isinstance(other, BigNat):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, BigNat):
            return NotImplemented
        return sub(self, other)

    @property
    def is_canonical(self) -> bool:
        return (not self.limbs or self.limbs[-1] != 0) and all(
            0 <= limb < LIMB_BASE for limb in self.limbs
        )


def _trim(limbs: list) -> tuple:
    while limbs and limbs[-1] == 0:
        limbs.pop()
    return tuple(limbs)


ZERO = BigNat._raw(())
ONE = BigNat._raw((1,))


def add(a: BigNat, b: BigNat) -> BigNat:
    x, y = a.limbs, b.limbs
    if len(x) < len(y):
        x, y = y, x
    out = []
    carry = 0
    for i, limb in enumerate(x):
        s = limb + carry
        if i < len(y):
            s += y[i]
        if s >= LIMB_BASE:
            out.append(s - LIMB_BASE)
            carry = 1
        else:
            out.append(s)
            carry = 0
    if carry:
        out.append(carry)
    return BigNat._raw(tuple(out))


def sub(a: BigNat, b: BigNat) -> BigNat:
    """Return a - b; raise BigNatUnderflow if a < b."""
    x, y = a.limbs, b.limbs
    if len(y) > len(x):
        raise BigNatUnderflow(f"{to_decimal(a)} - {to_decimal(b)} is negative")
    out = []
    borrow = 0
    ny = len(y)
    for i, limb in enumerate(x):
        d = limb - borrow
        if i < ny:
            d -= y[i]
        elif not borrow:
            out.extend(x[i:])
            break
        if d < 0:
            out.append(d + LIMB_BASE)
            borrow = 1
        else:
            out.append(d)
            borrow = 0
    else:
        if borrow:
            raise BigNatUnderflow(f"{to_decimal(a)} - {to_decimal(b)} is negative")
    return BigNat._raw(_trim(out))


def checked_sub(a: BigNat, b: BigNat) -> BigNat | None:
    """a - b, or None when that would be negative."""
    if cmp(a, b) < 0:
        return None
    return sub(a, b)


def cmp(a: BigNat, b: BigNat) -> int:
    """Three-way comparison: -1, 0 or 1."""
    x, y = a.limbs, b.limbs
    if len(x) != len(y):
        return -1 if len(x) < len(y) else 1
    for i in range(len(x) - 1, -1, -1):
        if x[i] != y[i]:
            return -1 if x[i] < y[i] else 1
    return 0


def mul_small(a: BigNat, c: int) -> BigNat:
    if not 0 <= c <= MAX_SCALAR:
        raise ValueError(f"scalar out of range: {c!r}")
    if c == 0 or not a.limbs:
        return ZERO
    if c == 1:
        return a
    out = []
    carry = 0
    for limb in a.limbs:
        carry, lo = divmod(limb * c + carry, LIMB_BASE)
        out.append(lo)
    while carry:
        carry, lo = divmod(carry, LIMB_BASE)
        out.append(lo)
    return BigNat._raw(tuple(out))


def shl10(a: BigNat, t: int) -> BigNat:
    """Return a * 10**t."""
    if t < 0:
        raise ValueError("shift count must be non-negative")
    if not a.limbs or t == 0:
        return a
    whole, part = divmod(t, LIMB_DIGITS)
    limbs = a.limbs
    if part:
        # split every limb at the digit boundary
        hi_div = 10 ** (LIMB_DIGITS - part)
        scale = 10**part
        out = []
        carry = 0
        for limb in limbs:
            hi, lo = divmod(limb, hi_div)
            out.append(lo * scale + carry)
            carry = hi
        if carry:
            out.append(carry)
        limbs = tuple(out)
    return BigNat._raw((0,) * whole + limbs)


def from_decimal(s: str) -> BigNat:
    if not isinstance(s, str) or not _DIGITS_RE.fullmatch(s):
        raise ValueError(f"not a decimal digit string: {s!r}")
    s = s.lstrip("0")
    out = []
    for end in range(len(s), 0, -LIMB_DIGITS):
        out.append(int(s[max(0, end - LIMB_DIGITS):end]))
    return BigNat._raw(tuple(out))


def to_decimal(a: BigNat) -> str:
    if not a.limbs:
        return "0"
    head = str(a.limbs[-1])
    return head + "".join(str(limb).zfill(LIMB_DIGITS) for limb in reversed(a.limbs[:-1]))


def from_int(n: int) -> BigNat:
    if n < 0:
        raise ValueError("BigNat cannot hold a negative value")
    out = []
    while n:
        n, lo = divmod(n, LIMB_BASE)
        out.append(lo)
    return BigNat._raw(tuple(out))
