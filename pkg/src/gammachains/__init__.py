"""Closed forms for Gamma(p/q) as products of the periods I_s.

    >>> from gammachains import solve_closed_form
    >>> cf = solve_closed_form(1, 3)
    >>> cf.exponent, str(cf.expr)
    (3, '2^(1/3) * 3^(1/2) * I_2 * I_3')
"""

from .chains import Chain, ChainStep, Closure, StepKind, double_step, minimal_chain, pm_order, render_chain
from .closed_form import (ClosedForm, apply_duplication, apply_recurrence, apply_reflection,
                          solve_closed_form)
from .geometry import classify_form, genus, schneider, table_row, uses_meromorphic
from .numerics import (branch_integral, eval_expr, quad_I, quad_I_nk, ref_beta, ref_gamma,
                       symmetry_ratio)
from .periodexpr import (GammaAt, IVal, PeriodExpr, SinPi, expr_mul, expr_pow, from_json,
                         to_canonical_string, to_json, to_latex)

__version__ = "0.1.0"

__all__ = [
    "Chain", "ChainStep", "Closure", "StepKind", "double_step", "minimal_chain", "pm_order",
    "render_chain",
    "ClosedForm", "apply_duplication", "apply_recurrence", "apply_reflection",
    "solve_closed_form",
    "classify_form", "genus", "schneider", "table_row", "uses_meromorphic",
    "branch_integral", "eval_expr", "quad_I", "quad_I_nk", "ref_beta", "ref_gamma",
    "symmetry_ratio",
    "GammaAt", "IVal", "PeriodExpr", "SinPi", "expr_mul", "expr_pow", "from_json",
    "to_canonical_string", "to_json", "to_latex",
]
