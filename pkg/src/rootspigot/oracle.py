"""Reference floor roots, independent of the spigot machines.

Uses the BigNat representation but brings its own schoolbook multiply,
power and halving.  Nothing here imports the digit machines, so a bug in a
machine cannot vouch for itself.
"""

from __future__ import annotations

from .bignat import LIMB_BASE, ONE, ZERO, BigNat, add, cmp, from_decimal, shl10, sub

__all__ = ["mul", "ipow", "half", "iroot_floor", "root_digit_string", "OracleError"]


class OracleError(AssertionError):
    """The oracle's own post-hoc check failed."""


def mul(a: BigNat, b: BigNat) -> BigNat:
    x, y = a.limbs, b.limbs
    if not x or not y:
        return ZERO
    if len(x) < len(y):
        x, y = y, x
    out = [0] * (len(x) + len(y))
    for j, yj in enumerate(y):
        if not yj:
            continue
        carry = 0
        for i, xi in enumerate(x):
            carry, out[i + j] = divmod(out[i + j] + xi * yj + carry, LIMB_BASE)
        k = j + len(x)
        while carry:
            carry, out[k] = divmod(out[k] + carry, LIMB_BASE)
            k += 1
    while out and out[-1] == 0:
        out.pop()
    return BigNat(out)


def ipow(a: BigNat, r: int) -> BigNat:
    if r < 0:
        raise ValueError("exponent must be non-negative")
    result = ONE
    base = a
    while r:
        if r & 1:
            result = mul(result, base)
        r >>= 1
        if r:
            base = mul(base, base)
    return result


def half(a: BigNat) -> BigNat:
    """floor(a / 2)."""
    out = []
    rem = 0
    for limb in reversed(a.limbs):
        q, rem = divmod(rem * LIMB_BASE + limb, 2)
        out.append(q)
    out.reverse()
    while out and out[-1] == 0:
        out.pop()
    return BigNat(out)


def iroot_floor(m: BigNat, r: int) -> BigNat:
    """Largest x with x**r <= m, by bisection."""
    if r < 2:
        raise ValueError("degree must be at least 2")
    lo = ZERO
    hi = shl10(ONE, -(-len(m) // r))
    while cmp(lo, hi) < 0:
        mid = half(add(add(lo, hi), ONE))
        if cmp(ipow(mid, r), m) <= 0:
            lo = mid
        else:
            hi = sub(mid, ONE)
    if not (cmp(ipow(lo, r), m) <= 0 < cmp(ipow(add(lo, ONE), r), m)):
        raise OracleError(f"floor {r}-th root check failed for {m}: {lo}")
    return lo


def root_digit_string(integer_digits: str, fraction_digits: str, r: int, n: int) -> str:
    """First ``n`` digits of the r-th root of ``integer_digits.fraction_digits``.

    The radicand is cut or zero-extended to exactly ``n`` groups of ``r``
    digits, aligned at the radix point the same way the machines group
    their input, so the floor root has exactly the machines' digits.
    """
    int_digits = integer_digits.lstrip("0") or "0"
    lead = -(-len(int_digits) // r) * r
    padded = int_digits.zfill(lead) + fraction_digits
    need = n * r
    padded = padded[:need].ljust(need, "0")
    return str(iroot_floor(from_decimal(padded), r)).zfill(n)
