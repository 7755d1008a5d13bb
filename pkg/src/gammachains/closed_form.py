"""Gamma rewrite rules and the chain solver producing closed forms.

Three identities drive everything:

* recurrence      Gamma(x) = (x - 1) Gamma(x - 1)
* duplication     Gamma(x)^2 = (1/x) I_{1/x} 2^(-2x) Gamma(2x),   0 < x < 1
* reflection      Gamma(x) Gamma(1 - x) = pi / sin(pi x)

Walking the minimal chain of ``p/q`` with the duplication rule gives
``Gamma(x0)^(2^m) = C * Gamma(x_m)`` and the chain's closure eliminates the
remaining Gamma factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Tuple

from .chains import Chain, Closure, minimal_chain
from .periodexpr import GammaAt, IVal, PeriodExpr, expr_mul, expr_pow, sin_pi

__all__ = [
    "ClosedForm",
    "apply_recurrence",
    "apply_duplication",
    "apply_reflection",
    "chain_coefficient",
    "solve_closed_form",
]

PI = PeriodExpr.atom(IVal(2))


@dataclass(frozen=True)
class ClosedForm:
    """``Gamma(arg) ** exponent == expr``."""

    arg: Fraction
    exponent: int
    expr: PeriodExpr
    chain: Chain

    def __post_init__(self):
        if self.exponent < 1:
            raise ValueError("closed-form exponent must be a positive integer")
        if self.expr.has_gamma():
            raise ValueError(f"closed form for Gamma({self.arg}) still contains Gamma atoms")

    def gamma_power(self, e) -> PeriodExpr:
        """Expression for ``Gamma(arg) ** e`` for any rational ``e``."""
        return expr_pow(self.expr, Fraction(e) / self.exponent)


def apply_recurrence(x) -> Tuple[PeriodExpr, Fraction]:
    """``Gamma(x) = (x - 1) Gamma(x - 1)`` for 1 < x < 2."""
    x = Fraction(x)
    if not 1 < x < 2:
        raise ValueError(f"recurrence step expects 1 < x < 2, got {x}")
    return PeriodExpr.rational(x - 1), x - 1


def apply_duplication(x) -> Tuple[PeriodExpr, Fraction]:
    """Coefficient ``c`` with ``Gamma(x)^2 = c * Gamma(2x)``, and ``2x``."""
    x = Fraction(x)
    if not 0 < x < 1:
        raise ValueError(f"duplication expects 0 < x < 1, got {x}")
    s = 1 / x
    c = PeriodExpr.rational(s) * PeriodExpr.atom(IVal(s)) * PeriodExpr.prime_power(2, -2 * x)
    return c, 2 * x


def apply_reflection(x) -> PeriodExpr:
    """Expression for ``Gamma(x) * Gamma(1 - x)``."""
    x = Fraction(x)
    if not 0 < x < 1 or x == Fraction(1, 2):
        raise ValueError(f"reflection needs 0 < x < 1, x != 1/2, got {x}")
    return PI / sin_pi(x)


def chain_coefficient(points) -> PeriodExpr:
    """``C`` with ``Gamma(x_0)^(2^m) = C * Gamma(x_m)`` along duplication points.

    Each step contributes its duplication coefficient, times the recurrence
    factor when ``2x`` passes 1; earlier coefficients square once for every
    later doubling.
    """
    c = PeriodExpr.one()
    for x in points:
        step, y = apply_duplication(x)
        if y > 1:
            rec, y = apply_recurrence(y)
            step = step * rec
        c = expr_mul(expr_pow(c, 2), step)
    return c


def solve_closed_form(p: int, q: int) -> ClosedForm:
    """Closed form ``Gamma(p/q)^E = expr`` with no Gamma left in ``expr``."""
    if not 1 <= p <= q:
        raise ValueError(f"need 1 <= p <= q, got {p}/{q}")
    if gcd(p, q) != 1:
        raise ValueError(f"{p}/{q} is not reduced")
    chain = minimal_chain(p, q)
    x0 = chain.start
    if chain.is_empty:
        return ClosedForm(x0, 1, PeriodExpr.one(), chain)

    points = chain.duplication_points
    m, j = chain.doublings, chain.reentry_index

    if chain.closure is Closure.TERMINATES_AT_ONE:
        # Gamma(x0)^(2^m) = C; report the square like Gamma(1/2)^2 = pi
        expr = expr_pow(chain_coefficient(points), Fraction(2, 2 ** m))
        return _checked(ClosedForm(x0, 2, expr, chain))

    # cycle through x_j: Gamma(x_j)^(2^(m-j)) = C_cyc * Gamma(x_m)
    xj = points[j]
    c_cyc = chain_coefficient(points[j:])
    if chain.closure is Closure.CYCLE_SAME_PLUS:
        e_cyc, cyc = 2 ** (m - j) - 1, c_cyc
    else:
        e_cyc, cyc = 2 ** (m - j) + 1, c_cyc * apply_reflection(xj)

    if j == 0:
        return _checked(ClosedForm(x0, e_cyc, cyc, chain))

    # pre-period: Gamma(x0)^(2^j) = C_pre * Gamma(x_j)
    c_pre = chain_coefficient(points[:j])
    expr = c_pre * expr_pow(cyc, Fraction(1, e_cyc))
    return _checked(ClosedForm(x0, 2 ** j, expr, chain))


def _checked(cf: ClosedForm) -> ClosedForm:
    if any(isinstance(a, GammaAt) for a in cf.expr.atoms):
        raise RuntimeError(f"internal error: Gamma atom survived for {cf.arg}")
    return cf
