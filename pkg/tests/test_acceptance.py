"""Exit criteria. Each test records one PASS/FAIL line in the terminal summary."""

import random
import time
from fractions import Fraction as F
from math import gcd

from gammachains.chains import Closure, minimal_chain, pm_order
from gammachains.closed_form import solve_closed_form
from gammachains.geometry import Verdict, schneider, table_row
from gammachains.numerics import (context, eval_expr, quad_I, ref_beta, ref_gamma,
                                  symmetry_ratio)
from gammachains.periodexpr import IVal, PeriodExpr, SinPi

I = lambda s, e=1: PeriodExpr.atom(IVal(F(s)), e)  # noqa: E731
P = PeriodExpr.prime_power
R = PeriodExpr.rational


def test_ac1_table_symbolic_reproduction(acceptance):
    t0 = time.perf_counter()
    half = F(1, 2)
    expected = {
        2: (2, I(2)),
        3: (3, P(2, F(1, 3)) * P(3, half) * I(2) * I(3)),
        5: (5, P(5, 3) * P(2, F(-13, 5)) * I(2) * I(5, 2) * I(F(5, 2))
            * PeriodExpr.atom(SinPi(F(1, 5)), -1)),
        7: (7, P(7, 6) * P(2, F(-52, 7)) * I(7, 4) * I(F(7, 2), 2) * I(F(7, 4))),
    }
    ok = all((solve_closed_form(1, q).exponent, solve_closed_form(1, q).expr) == v
             for q, v in expected.items())
    # q = 4, 8: nested radicals, expanded
    quarter = (R(2) * I(4) * (R(2) * I(2)) ** half) ** half
    eighth = (R(4) * I(8) * (R(4) * I(4) * (R(4) * I(2)) ** half) ** half) ** half
    ok &= solve_closed_form(1, 4).gamma_power(1) == quarter
    ok &= solve_closed_form(1, 8).gamma_power(1) == eighth
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 1.0
    acceptance.record("AC1 table closed forms q in {2,3,4,5,7,8}", ok, f"{elapsed:.3f}s")
    assert ok


def test_ac2_numeric_verification(acceptance):
    t0 = time.perf_counter()
    ctx = context(60)
    worst, count, bad = ctx.mpf(0), 0, []
    for q in range(2, 21):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            cf = solve_closed_form(p, q)
            want = ctx.mpf(ref_gamma(cf.arg, 50)) ** cf.exponent
            err = abs(ctx.mpf(eval_expr(cf.expr, 50)) - want) / want
            worst = max(worst, err)
            count += 1
            if not err < ctx.mpf(10) ** -25:
                bad.append((p, q))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60
    acceptance.record("AC2 numeric closed forms q <= 20 at 50 digits", ok,
                      f"{count} fractions, worst rel {float(worst):.2e} < 1e-25, {elapsed:.1f}s")
    assert ok, bad


def test_ac3_chain_theorem(acceptance):
    t0 = time.perf_counter()
    bad = []
    count = 0
    for q in range(3, 200, 2):
        m, sign = pm_order(2, q)
        # +1 and -1 coincide only modulo 1 or 2
        unique = not (pow(2, m, q) == 1 and pow(2, m, q) == q - 1)
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            c = minimal_chain(p, q)
            count += 1
            closes = c.closure in (Closure.CYCLE_SAME_PLUS, Closure.CYCLE_REFLECT_MINUS)
            if not (closes and unique and c.doublings == m and c.sign == sign
                    and c.reentry_index == 0):
                bad.append((p, q))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 10
    acceptance.record("AC3 chain theorem odd q <= 199", ok, f"{count} chains, {elapsed:.2f}s")
    assert ok, bad[:10]


def test_ac4_quadrature_vs_beta(acceptance):
    ctx = context(70)
    tol = ctx.mpf(10) ** -40
    worst = ctx.mpf(0)
    bad = []
    for s in (1, F(3, 2), F(7, 4), 2, F(5, 2), 3, F(7, 2), 4, 5, 7, 8):
        s = F(s)
        r = quad_I(s, 50)
        oracle = 2 / (ctx.mpf(s.numerator) / s.denominator) * ctx.mpf(ref_beta(1 / s, F(1, 2), 60))
        d = abs(ctx.mpf(r.value) - oracle)
        worst = max(worst, d)
        if not (r.converged and d < tol):
            bad.append(s)
    pi_err = abs(ctx.mpf(quad_I(2, 50).value) - ctx.pi)
    ok = not bad and pi_err < tol
    acceptance.record("AC4 quadrature vs Beta at 50 digits", ok,
                      f"worst {float(worst):.2e}, |I_2 - pi| {float(pi_err):.2e} < 1e-40")
    assert ok, bad


def test_ac5_meromorphic_column(acceptance):
    got = {q: table_row(q, None).uses_meromorphic for q in range(2, 9)}
    want = {2: False, 3: False, 4: False, 5: False, 6: False, 7: True, 8: False}
    ok = got == want
    acceptance.record("AC5 meromorphic column q = 2..8", ok, str(got))
    assert ok


def test_ac6_schneider_verdicts(acceptance):
    seen = set()
    for q in range(2, 9):
        seen.update(solve_closed_form(1, q).expr.i_indices())
    wrong = [s for s in seen
             if (schneider(s).verdict is Verdict.NOT_APPLICABLE) != (s == 2)]
    ok = not wrong and 2 in seen
    acceptance.record("AC6 Schneider verdicts q <= 8", ok,
                      f"{len(seen)} periods: " + ", ".join(str(s) for s in sorted(seen)))
    assert ok, wrong


def test_ac7_branch_symmetry(acceptance):
    phases = {}
    bad = []
    ctx = context(50)
    for n in range(2, 9):
        ratio, branch, period = symmetry_ratio(n, 50)
        phases[n] = float(ctx.arg(ratio) / ctx.pi)
        if not (branch.converged and period.converged and abs(abs(ratio) - 1) < 1e-8):
            bad.append(n)
    r2, _, _ = symmetry_ratio(2, 50)
    ok = not bad and abs(r2 + 1) < 1e-8
    acceptance.record("AC7 |branch ratio| = 1 for n = 2..8, n=2 ratio -1", ok,
                      "phase/pi " + ", ".join(f"{n}:{v:+.3f}" for n, v in phases.items()))
    assert ok, bad


def test_ac8_oracle_identities(acceptance):
    """Recurrence on x in (0,1) u (1,2); reflection on x, or on x - 1 when x > 1."""
    rng = random.Random(20261019)
    ctx = context(70)
    tol = ctx.mpf(10) ** -45
    worst = ctx.mpf(0)
    for i in range(100):
        den = rng.randint(2, 1000)
        num = rng.randint(1, 2 * den - 1)
        if num == den:
            num += 1
        x = F(num, den)
        xs = ctx.mpf(x.numerator) / x.denominator
        rec = abs(ctx.mpf(ref_gamma(x + 1, 50)) / (xs * ctx.mpf(ref_gamma(x, 50))) - 1)
        y = x if x < 1 else x - 1
        ys = ctx.mpf(y.numerator) / y.denominator
        refl = abs(ctx.mpf(ref_gamma(y, 50)) * ctx.mpf(ref_gamma(1 - y, 50))
                   * ctx.sinpi(ys) / ctx.pi - 1)
        worst = max(worst, rec, refl)
    ok = worst < tol
    acceptance.record("AC8 Gamma recurrence/reflection, 100 rationals", ok,
                      f"worst rel {float(worst):.2e} < 1e-45")
    assert ok
