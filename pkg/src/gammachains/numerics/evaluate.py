"""Numeric value of a :class:`~gammachains.periodexpr.PeriodExpr`."""

from __future__ import annotations

from ..periodexpr import GammaAt, IVal, PeriodExpr, SinPi
from ._ctx import context, to_mpf
from .gamma import ref_beta
from .quadrature import quad_I

__all__ = ["period_value", "eval_expr"]


def period_value(s, digits: int = 50, quadrature: bool = False):
    """I_s from (2/s) B(1/s, 1/2), or by tanh-sinh when ``quadrature`` is set."""
    ctx = context(digits)
    if quadrature:
        return quad_I(s, digits).value
    inv = 1 / IVal(s).s
    return ctx.mpf(2 * to_mpf(ctx, inv) * ref_beta(inv, "0.5", digits))


def eval_expr(e: PeriodExpr, digits: int = 50, quadrature: bool = False):
    """Evaluate ``e`` to relative error below ``10**-(digits - 12)``.

    Raises ValueError if ``e`` still contains an unresolved Gamma atom.
    """
    if e.has_gamma():
        raise ValueError(f"cannot evaluate an expression with Gamma atoms: {e}")
    wdps = digits + 10
    ctx = context(wdps)
    logs = []
    for p, x in e.primes.items():
        logs.append(to_mpf(ctx, x) * ctx.log(p))
    for a, x in e.atoms.items():
        if isinstance(a, IVal):
            v = period_value(a.s, wdps, quadrature)
        elif isinstance(a, SinPi):
            v = ctx.sinpi(to_mpf(ctx, a.r))
        else:  # pragma: no cover - excluded above
            raise AssertionError(type(a))
        logs.append(to_mpf(ctx, x) * ctx.log(v))
    return context(digits).mpf(ctx.exp(ctx.fsum(logs)))
