"""Exact comparison of integers against bounds of the form base^(a*log2(t)+b).

The exponents here are irrational whenever t is not a power of two, so
floating point is never trusted.  Three exact routes:

  * base 0 or 1: the bound degenerates to 0 or 1.
  * base or t a power of two (or a = 0): the bound is an exact integer
    such as (2^e)^(a*log2(t)+b) = t^(e*a) * 2^(e*b).
  * otherwise: compare logarithms through certified dyadic enclosures of
    log2 built by truncated repeated squaring, widening the grid until
    the enclosures separate.  A tie (an integer exactly equal to one of
    these irrational-exponent powers) is not expected to exist, but
    rather than lean on transcendence results the comparison raises
    after the widest grid instead of guessing.
"""

from __future__ import annotations

import math

from .errors import CertificationError

_PRECISIONS = (8, 32, 128)


def _log2_bounds(x: int, j: int) -> tuple[int, int]:
    """lo, hi with log2(x) in [lo/2^j, hi/2^j]; requires x >= 2.

    Repeated squaring tracks x^(2^j) as an interval [lo_m, hi_m]*2^shift
    truncated to a fixed width (floor below, ceil above), so the final
    bit lengths certify log2(x^(2^j)) to within the accumulated slack,
    which the 16 guard bits keep under one unit of the 2^-j grid.
    """
    width = j + 16
    lo_m = hi_m = x
    shift = x.bit_length() - width
    if shift > 0:
        lo_m >>= shift
        hi_m = -(-hi_m >> shift)
    else:
        shift = 0
    for _ in range(j):
        lo_m *= lo_m
        hi_m *= hi_m
        shift *= 2
        excess = hi_m.bit_length() - width
        if excess > 0:
            lo_m >>= excess
            hi_m = -(-hi_m >> excess)
            shift += excess
    return shift + lo_m.bit_length() - 1, shift + hi_m.bit_length()


def power_bound_holds(value: int, base: int, t: int, a: int, b: int) -> bool:
    """Decide value <= base^(a*log2(t) + b) exactly.

    Requires value >= 0, base >= 0, t >= 1, a >= 0, b >= 0.
    """
    if value < 0 or base < 0 or t < 1 or a < 0 or b < 0:
        raise ValueError("power_bound_holds needs nonnegative arguments and t >= 1")
    if base == 0:
        # 0^e = 0 for e > 0; treat e = 0 (t=1, b=0) as 1
        bound = 1 if (a == 0 or t == 1) and b == 0 else 0
        return value <= bound
    if base == 1:
        return value <= 1
    if value <= 1:
        return True
    if a == 0:
        return value <= base**b
    if t & (t - 1) == 0:
        # log2(t) integer: a plain integer power
        e = a * (t.bit_length() - 1) + b
        return value <= base ** e
    if base & (base - 1) == 0:
        # base = 2^e: bound = t^(e*a) * 2^(e*b) exactly
        e = base.bit_length() - 1
        return value <= t ** (e * a) * 2 ** (e * b)
    # general case: value <= base^(a*log2 t + b)
    # iff log2(value) <= (a*log2(t) + b) * log2(base)
    for j in _PRECISIONS:
        scale = 1 << j
        pv_lo, pv_hi = _log2_bounds(value, j)
        pt_lo, pt_hi = _log2_bounds(t, j)
        pb_lo, pb_hi = _log2_bounds(base, j)
        # all quantities scaled by 2^(2j)
        lhs_lo, lhs_hi = pv_lo * scale, pv_hi * scale
        rhs_lo = (a * pt_lo + b * scale) * pb_lo
        rhs_hi = (a * pt_hi + b * scale) * pb_hi
        if lhs_hi <= rhs_lo:
            return True
        if lhs_lo > rhs_hi:
            return False
    raise CertificationError(
        "bound comparison undecided at maximum precision",
        details={"value": value, "base": base, "t": t, "a": a, "b": b},
    )


def bound_repr(base: int, t: int, a: int, b: int) -> str:
    return f"{base}^({a}*log2({t})+{b})"


def bound_approx(base: int, t: int, a: int, b: int) -> float:
    """Float estimate of base^(a*log2(t)+b); for report readability only."""
    if base <= 1 or t < 1:
        return float(base)
    try:
        return float(base) ** (a * math.log2(t) + b)
    except OverflowError:
        return math.inf
