"""Tanh-sinh quadrature for the period integrals I_s and I_{n/k}.

The substitution ``x = (1 + tanh(pi/2 sinh t)) / 2`` maps (0, 1) onto the
real line and makes algebraic endpoint singularities such as
``(1 - x)**-1/2`` decay double-exponentially. Integrands receive both ``x``
and the complement ``c = 1 - x`` computed directly from the transform, so no
digits are lost next to the singular endpoint.

Levels halve the step ``h = 2**-level``; the reported error estimate is the
difference between the last two levels, which overstates the true error of
the finer level once the rule is converging.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Tuple

from ._ctx import context, convert, to_mpf

__all__ = [
    "QuadResult",
    "tanh_sinh",
    "quad_I",
    "quad_I_nk",
    "branch_integral",
    "symmetry_ratio",
    "MAX_LEVEL",
]

MAX_LEVEL = 12
_MIN_LEVEL = 3
_GUARD = 15


@dataclass(frozen=True)
class QuadResult:
    value: object
    err_estimate: float
    evaluations: int
    converged: bool = True
    levels: int = 0


def _t_max(wdps: int) -> float:
    # complement 1 - x ~ exp(-pi sinh t); go until it is below 10**-(2 wdps)
    u = 2 * wdps * math.log(10) + 10
    return math.asinh(u / math.pi)


@lru_cache(maxsize=256)
def _nodes(wdps: int, level: int) -> Tuple[Tuple, ...]:
    """(x, 1 - x, dx/dt) at the nodes new to ``level`` (all nodes at level 0)."""
    ctx = context(wdps)
    h = ctx.ldexp(1, -level)
    kmax = int(_t_max(wdps) * 2 ** level) + 1
    ks = range(-kmax, kmax + 1) if level == 0 else range(-kmax | 1, kmax + 1, 2)
    half_pi = ctx.pi / 2
    out = []
    for k in ks:
        t = k * h
        u = half_pi * ctx.sinh(t)
        e = ctx.exp(-2 * abs(u))
        near = e / (1 + e)  # distance to the closer endpoint
        x, c = (1 - near, near) if u > 0 else (near, 1 - near)
        out.append((x, c, 2 * half_pi * ctx.cosh(t) * e / (1 + e) ** 2))
    return tuple(out)


def tanh_sinh(f: Callable, digits: int = 50, tol_digits: int | None = None,
              max_level: int = MAX_LEVEL) -> QuadResult:
    """Integrate ``f(x, c)`` over (0, 1), where ``c = 1 - x``.

    Works at ``digits + 15`` internally and stops once two successive levels
    differ by less than ``10**-tol_digits`` (default ``digits - 10``).
    ``f`` may return real or complex values of the working context.
    """
    tol_digits = digits - 10 if tol_digits is None else tol_digits
    wdps = digits + _GUARD
    ctx = context(wdps)
    tol = ctx.mpf(10) ** (-tol_digits)

    raw = 0
    evals = 0
    prev = diff = None
    for level in range(max_level + 1):
        nodes = _nodes(wdps, level)
        raw += ctx.fsum(w * f(x, c) for x, c, w in nodes)
        evals += len(nodes)
        cur = raw * ctx.ldexp(1, -level)
        if prev is not None:
            diff = abs(cur - prev)
            if level >= _MIN_LEVEL and diff < tol:
                return QuadResult(_round(digits, cur), _published(diff, cur, digits),
                                  evals, True, level)
        prev = cur
    return QuadResult(_round(digits, prev), _published(diff, prev, digits),
                      evals, False, max_level)


def _published(diff, value, digits: int) -> float:
    # never claim more than the rounding of the returned value
    return max(float(diff), float(abs(value)) * 10.0 ** (-digits))


def _round(digits: int, v):
    return convert(context(digits), v)


def _one_minus_power(ctx, x, c, s):
    """1 - x**s for 0 < x < 1, accurate when x is close to 1."""
    if x < 0.5:
        return 1 - ctx.power(x, s)
    return -ctx.expm1(s * ctx.log1p(-c))


def _check_period_index(s: Fraction) -> None:
    if s < 1:
        raise ValueError(f"I_s is defined here for s >= 1 only (Re(s) >= 1), got {s}")


def quad_I(s, digits: int = 50) -> QuadResult:
    """I_s = 2 * int_0^1 dx / sqrt(1 - x**s) by tanh-sinh, s >= 1."""
    s = Fraction(s)
    _check_period_index(s)
    ctx = context(digits + _GUARD)
    sv = to_mpf(ctx, s)

    def f(x, c):
        return 2 / ctx.sqrt(_one_minus_power(ctx, x, c, sv))

    return tanh_sinh(f, digits)


def quad_I_nk(n: int, k: int, digits: int = 50) -> QuadResult:
    """I_{n/k} = 2k * int_0^1 x**(k-1) / sqrt(1 - x**n) dx, 1 <= k <= n."""
    if n < 1 or not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    ctx = context(digits + _GUARD)

    def f(x, c):
        return 2 * k * x ** (k - 1) / ctx.sqrt(_one_minus_power(ctx, x, c, n))

    return tanh_sinh(f, digits)


def _root_of_unity(ctx, n: int):
    r = ctx.mpf(2) / n
    return ctx.mpc(ctx.cospi(r), ctx.sinpi(r))


def branch_integral(n: int, digits: int = 50) -> QuadResult:
    """int_1^zeta dx / sqrt(1 - x**n) along the straight segment, zeta = exp(2 pi i / n).

    Uses ``x(t) = 1 + t (zeta - 1)`` and the principal square root
    throughout; no sheet tracking.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    ctx = context(digits + _GUARD)
    zeta = _root_of_unity(ctx, n)
    delta = zeta - 1
    back = ctx.conj(zeta) - 1   # x = zeta * (1 + (1 - t) * back)

    def f(t, c):
        if t < 0.25:
            d = -ctx.expm1(n * ctx.log1p(t * delta))
        elif c < 0.25:
            d = -ctx.expm1(n * ctx.log1p(c * back))
        else:
            d = 1 - (1 + t * delta) ** n
        return delta / ctx.sqrt(d)

    return tanh_sinh(f, digits)


def symmetry_ratio(n: int, digits: int = 50):
    """branch_integral(n) / ((1 - zeta) * int_0^1 dx / sqrt(1 - x**n)).

    Returns ``(ratio, branch, period)`` where ``period`` is the QuadResult for
    I_n. Whether the ratio is 1 is not assumed anywhere.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    ctx = context(digits)
    branch = branch_integral(n, digits)
    period = quad_I(n, digits)
    rhs = (1 - _root_of_unity(ctx, n)) * period.value / 2
    return branch.value / rhs, branch, period
