# Closed forms Gamma(p/q)^E = product of periods I_s, prime powers and sines
#
# Each doubling uses Gamma(x)^2 = (1/x) I_{1/x} 2^(-2x) Gamma(2x), with
# Gamma(y) = (y - 1) Gamma(y - 1) when 2x passes 1, and a reflection
# Gamma(x) Gamma(1 - x) = pi / sin(pi x) closes "-" cycles. pi is I_2.

from fractions import Fraction

from gammachains import eval_expr, ref_gamma, solve_closed_form, to_latex
from gammachains.numerics import context

for q in range(2, 9):
    cf = solve_closed_form(1, q)
    print(f"Gamma(1/{q})^{cf.exponent} = {cf.expr}")

# LaTeX, with negative exponents in a denominator.
print()
print(to_latex(solve_closed_form(1, 7).expr))
print(to_latex(solve_closed_form(1, 5).expr, pi=True))

# Numerical check against the Spouge reference Gamma at 50 digits.
ctx = context(60)
print()
for p, q in [(1, 7), (3, 7), (5, 13), (7, 20)]:
    cf = solve_closed_form(p, q)
    lhs = ctx.mpf(ref_gamma(Fraction(p, q), 50)) ** cf.exponent
    rhs = ctx.mpf(eval_expr(cf.expr, 50))
    print(f"{p}/{q}: E={cf.exponent:4d}  relative difference {float(abs(rhs / lhs - 1)):.1e}")

# Gamma(p/q)^q instead of the chain's natural exponent.
cf = solve_closed_form(1, 9)
print()
print(f"Gamma(1/9)^9  = {cf.gamma_power(9)}")
print(f"Gamma(1/23)^E with E = {solve_closed_form(1, 23).exponent}")
