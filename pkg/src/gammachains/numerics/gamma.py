"""Reference Gamma and Beta functions via Spouge's approximation.

Spouge's formula with parameter ``a`` has relative error at most
``a**-0.5 * (2*pi)**-(a + 0.5)`` for ``Re z > 0``, so ``a`` can be picked to
reach any requested number of digits. This module is the independent oracle
against which closed forms are checked; it does not call ``mpmath.gamma``.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Optional, Tuple

from ._ctx import context, to_mpf

__all__ = ["spouge_error_bound", "spouge_parameter", "ref_gamma", "ref_beta"]

_LOG10_2PI = math.log10(2 * math.pi)


def spouge_error_bound(a: int) -> float:
    """log10 of the relative error bound for parameter ``a``."""
    return -0.5 * math.log10(a) - (a + 0.5) * _LOG10_2PI


def spouge_parameter(digits: int) -> int:
    """Smallest ``a`` whose error bound is below ``10**-(digits + 2)``."""
    a = max(2, int((digits + 2) / _LOG10_2PI) - 2)
    while spouge_error_bound(a) > -(digits + 2):
        a += 1
    return a


def _guard_digits(a: int) -> int:
    # the alternating coefficient sum cancels about log10(max |c_k|) digits
    worst = max((k - 0.5) * math.log(a - k) + (a - k) - math.lgamma(k)
                for k in range(1, a))
    return int(worst / math.log(10)) + 10


@lru_cache(maxsize=64)
def _coefficients(a: int, wdps: int) -> Tuple:
    ctx = context(wdps)
    c = [ctx.sqrt(2 * ctx.pi)]
    fact = ctx.mpf(1)
    for k in range(1, a):
        if k > 1:
            fact *= k - 1
        ck = ctx.power(a - k, k - ctx.mpf(0.5)) * ctx.exp(a - k) / fact
        c.append(ck if k % 2 else -ck)
    return tuple(c)


def _spouge(z, a: int, wdps: int):
    """Gamma(z + 1) for z > 0 at working precision ``wdps``."""
    ctx = context(wdps)
    c = _coefficients(a, wdps)
    s = c[0]
    for k in range(1, a):
        s += c[k] / (z + k)
    za = z + a
    return ctx.power(za, z + ctx.mpf(0.5)) * ctx.exp(-za) * s


def ref_gamma(x, digits: int = 50, spouge_a: Optional[int] = None):
    """Gamma(x) for real x > 0 to relative error below ``10**-(digits - 5)``.

    ``x`` may be an int, Fraction, str or mpf. Arguments are shifted above 1
    with ``Gamma(x) = Gamma(x + 1) / x`` before applying Spouge's formula.
    ``spouge_a`` overrides the automatically chosen parameter.
    """
    a = spouge_a if spouge_a is not None else spouge_parameter(digits)
    wdps = digits + _guard_digits(a)
    w = context(wdps)
    y = to_mpf(w, x)
    if y <= 0:
        raise ValueError(f"ref_gamma needs x > 0, got {x}")
    denom = w.mpf(1)
    while y <= 1:
        denom *= y
        y += 1
    return context(digits).mpf(_spouge(y - 1, a, wdps) / denom)


def ref_beta(a, b, digits: int = 50):
    """B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b) for a, b > 0."""
    w = context(digits + 5)
    x, y = to_mpf(w, a), to_mpf(w, b)
    if x <= 0 or y <= 0:
        raise ValueError(f"ref_beta needs positive arguments, got ({a}, {b})")
    g = lambda t: ref_gamma(t, digits + 5)  # noqa: E731
    return context(digits).mpf(g(x) * g(y) / g(x + y))
