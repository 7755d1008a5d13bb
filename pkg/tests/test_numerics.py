import random
from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from gammachains.numerics import (branch_integral, context, eval_expr, period_value, quad_I,
                                  quad_I_nk, ref_beta, ref_gamma, spouge_parameter,
                                  symmetry_ratio, tanh_sinh)
from gammachains.closed_form import solve_closed_form
from gammachains.periodexpr import GammaAt, PeriodExpr

CTX = context(80)
SQRT_PI_50 = "1.7724538509055160272981674833411451827975494561224"
# frozen with mpmath.gamma / mpmath.beta at 60 digits (independent library)
GAMMA_FIFTH = "4.5908437119988030532047582759291520034341099982934"
BETA_QUARTER_HALF = "5.2441151085842396209296791797822388273655099028632"
I4 = "2.6220575542921198104648395898911194136827549514316"


def rel(a, b):
    return abs(CTX.mpf(a) / CTX.mpf(b) - 1)


def close(a, b, digits):
    return abs(CTX.mpf(a) - CTX.mpf(b)) < CTX.mpf(10) ** -digits


# reference Gamma -----------------------------------------------------------

def test_ref_gamma_examples():
    assert rel(ref_gamma(F(1, 2), 50), SQRT_PI_50) < 1e-48
    assert ref_gamma(1, 50) == 1
    assert rel(ref_gamma(F(1, 5), 50), GAMMA_FIFTH) < 1e-48


def test_ref_gamma_two_parameter_choices_agree():
    a = spouge_parameter(50)
    g1 = ref_gamma(F(1, 5), 50, spouge_a=a)
    g2 = ref_gamma(F(1, 5), 50, spouge_a=a + 12)
    assert rel(g1, g2) < 1e-45


@pytest.mark.parametrize("digits", [20, 50, 100])
def test_ref_gamma_against_mpmath(digits):
    rng = random.Random(digits)
    ctx = context(digits + 20)  # ctx.gamma is mpmath's own implementation
    for _ in range(20):
        x = F(rng.randint(1, 5000), rng.randint(1, 997))
        want = ctx.gamma(ctx.mpf(x.numerator) / x.denominator)
        assert abs(ctx.mpf(ref_gamma(x, digits)) / want - 1) < ctx.mpf(10) ** -(digits - 5)


def test_ref_gamma_rejects_nonpositive():
    for bad in (0, -1, F(-1, 2)):
        with pytest.raises(ValueError):
            ref_gamma(bad)


def test_ref_gamma_accepts_strings_and_floats():
    assert rel(ref_gamma("0.5", 30), SQRT_PI_50) < 1e-28
    assert rel(ref_gamma(0.5, 30), SQRT_PI_50) < 1e-28


@settings(max_examples=30, deadline=None)
@given(st.fractions(min_value=0, max_value=2, max_denominator=500).filter(lambda x: 0 < x < 2))
def test_recurrence_identity(x):
    assert rel(ref_gamma(x + 1, 50), x * CTX.mpf(ref_gamma(x, 60))) < 1e-45


@settings(max_examples=30, deadline=None)
@given(st.fractions(min_value=0, max_value=1, max_denominator=500).filter(lambda x: 0 < x < 1))
def test_reflection_identity(x):
    ctx = context(70)
    xs = ctx.mpf(x.numerator) / x.denominator
    lhs = ctx.mpf(ref_gamma(x, 50)) * ctx.mpf(ref_gamma(1 - x, 50)) * ctx.sinpi(xs)
    assert rel(lhs, ctx.pi) < 1e-45


def test_ref_beta_examples():
    assert rel(ref_beta(F(1, 2), F(1, 2), 50), CTX.pi) < 1e-45
    assert rel(ref_beta(1, 1, 50), 1) < 1e-45
    assert rel(ref_beta(F(1, 4), F(1, 2), 50), BETA_QUARTER_HALF) < 1e-45
    with pytest.raises(ValueError):
        ref_beta(0, 1)


# quadrature ------------------------------------------------------------------

def test_quad_I_two_is_pi():
    r = quad_I(2, 50)
    assert r.converged
    assert close(r.value, CTX.pi, 45)


def test_quad_I_four_matches_beta():
    r = quad_I(4, 50)
    assert close(r.value, I4, 45)
    assert close(r.value, CTX.mpf(ref_beta(F(1, 4), F(1, 2), 55)) / 2, 45)


def test_quad_I_large_index_approaches_two():
    s = 1000
    r = quad_I(s, 30)
    oracle = F(2, s) * CTX.mpf(1) * ref_beta(F(1, s), F(1, 2), 35)
    assert r.converged and close(r.value, oracle, 25)
    assert abs(r.value - 2) < 0.01


def test_quad_I_rejects_small_index():
    with pytest.raises(ValueError):
        quad_I(F(1, 2))


def test_quad_I_nk_examples():
    assert close(quad_I_nk(2, 1, 40).value, CTX.pi, 35)
    assert close(quad_I_nk(7, 4, 40).value, quad_I(F(7, 4), 40).value, 35)
    assert close(quad_I_nk(5, 2, 40).value, F(4, 5) * CTX.mpf(ref_beta(F(2, 5), F(1, 2), 45)), 35)
    for n, k in ((3, 0), (3, 4), (0, 1)):
        with pytest.raises(ValueError):
            quad_I_nk(n, k)


@pytest.mark.parametrize("n", range(1, 9))
def test_reduction_identity(n):
    for k in range(1, n + 1):
        a = quad_I_nk(n, k, 40)
        b = quad_I(F(n, k), 40)
        assert abs(a.value - b.value) < a.err_estimate + b.err_estimate + 1e-38


@pytest.mark.parametrize("s", [F(3, 2), 3, F(7, 4)])
def test_precision_doubling_within_error_bound(s):
    lo = quad_I(s, 30)
    hi = quad_I(s, 60)
    assert abs(CTX.mpf(lo.value) - CTX.mpf(hi.value)) <= lo.err_estimate


def test_non_convergence_is_flagged():
    r = tanh_sinh(lambda x, c: 1 / CTX.sqrt(c), 50, max_level=2)
    assert not r.converged
    assert r.err_estimate > 0


def test_engine_on_known_integral():
    ctx = context(65)
    r = tanh_sinh(lambda x, c: ctx.log(x) / ctx.sqrt(c), 50)  # = 4 ln 2 - 4
    assert close(r.value, 4 * ctx.log(2) - 4, 45)


# evaluation ------------------------------------------------------------------

def test_eval_examples():
    assert close(eval_expr(solve_closed_form(1, 2).expr, 50), CTX.pi, 45)
    assert eval_expr(PeriodExpr.one(), 50) == 1
    cf = solve_closed_form(1, 7)
    assert rel(eval_expr(cf.expr, 50), CTX.mpf(ref_gamma(F(1, 7), 60)) ** 7) < 1e-25


def test_eval_with_quadrature_path():
    cf = solve_closed_form(1, 5)
    a = eval_expr(cf.expr, 40)
    b = eval_expr(cf.expr, 40, quadrature=True)
    assert rel(a, b) < 1e-30
    assert close(period_value(F(7, 4), 40), period_value(F(7, 4), 40, quadrature=True), 30)


def test_eval_rejects_gamma_atoms():
    with pytest.raises(ValueError):
        eval_expr(PeriodExpr.atom(GammaAt(F(1, 3))))


# branch-point integrals -----------------------------------------------------------

def test_branch_integral_n2_is_minus_pi():
    r = branch_integral(2, 40)
    assert r.converged
    # arcsin(-1) - arcsin(1)
    assert close(r.value.real, -CTX.pi, 35) and abs(r.value.imag) < 1e-35


def test_branch_integral_n3_modulus():
    ctx = context(50)
    r = branch_integral(3, 40)
    zeta = ctx.mpc(ctx.cospi(ctx.mpf(2) / 3), ctx.sinpi(ctx.mpf(2) / 3))
    want = abs(1 - zeta) * quad_I(3, 40).value / 2
    assert close(abs(r.value), want, 35)
    assert r.err_estimate < 1e-30


@pytest.mark.parametrize("n", range(2, 9))
def test_symmetry_ratio_modulus(n):
    ratio, branch, period = symmetry_ratio(n, 30)
    assert branch.converged and period.converged
    assert abs(abs(ratio) - 1) < 1e-8
    ratio_hi, _, _ = symmetry_ratio(n, 45)
    assert abs(abs(ratio_hi) - abs(ratio)) < 1e-20


def test_symmetry_ratio_n2():
    ratio, _, _ = symmetry_ratio(2, 30)
    assert abs(ratio + 1) < 1e-8


def test_branch_rejects_small_n():
    with pytest.raises(ValueError):
        branch_integral(1)
    with pytest.raises(ValueError):
        symmetry_ratio(1)


def test_global_precision_untouched():
    before = mpmath.mp.dps
    ref_gamma(F(1, 3), 120)
    quad_I(3, 70)
    assert mpmath.mp.dps == before


def test_result_precision_follows_argument():
    assert context(30).mpf(ref_gamma(F(1, 3), 30)) == ref_gamma(F(1, 3), 30)
    assert ref_gamma(F(1, 3), 30).context.dps == 30
