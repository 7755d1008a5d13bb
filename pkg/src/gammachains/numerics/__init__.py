"""Precision-parametrized numerics; every routine takes ``digits`` explicitly."""

from .evaluate import eval_expr, period_value
from .gamma import ref_beta, ref_gamma, spouge_parameter
from .quadrature import (QuadResult, branch_integral, quad_I, quad_I_nk,
                         symmetry_ratio, tanh_sinh)
from ._ctx import context

__all__ = [
    "QuadResult",
    "branch_integral",
    "context",
    "eval_expr",
    "period_value",
    "quad_I",
    "quad_I_nk",
    "ref_beta",
    "ref_gamma",
    "spouge_parameter",
    "symmetry_ratio",
    "tanh_sinh",
]
