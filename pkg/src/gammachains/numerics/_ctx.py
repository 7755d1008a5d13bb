"""Private mpmath contexts keyed by decimal precision.

Every numeric routine takes its precision as an argument and works in its own
context, so the global ``mpmath.mp`` precision is never read or changed.
Contexts are created once and never mutated afterwards.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Real

from mpmath.ctx_mp import MPContext
from mpmath.ctx_mp_python import _mpc, _mpf


@lru_cache(maxsize=None)
def context(digits: int) -> MPContext:
    if digits < 1:
        raise ValueError(f"precision must be positive, got {digits}")
    ctx = MPContext()
    ctx.dps = digits
    return ctx


def to_mpf(ctx: MPContext, x):
    """Convert an int, Fraction, str, float or mpf exactly (as far as ctx allows)."""
    if isinstance(x, Fraction):
        return ctx.mpf(x.numerator) / x.denominator
    if isinstance(x, (_mpf, str, Real)):
        return ctx.mpf(x)
    raise TypeError(f"cannot convert {type(x).__name__} to a real number")


def convert(ctx: MPContext, x):
    """Re-round an mpf/mpc produced in another context."""
    if isinstance(x, (_mpc, complex)):
        return ctx.mpc(x)
    return to_mpf(ctx, x)
