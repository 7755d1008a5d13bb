# The periods I_s and the curves y^2 = 1 - x^n
#
# I_s = 2 int_0^1 dx / sqrt(1 - x^s) = (2/s) B(1/s, 1/2). Tanh-sinh
# quadrature absorbs the inverse square-root singularity at x = 1, so the
# integral and the Beta function agree to the working precision.

from fractions import Fraction

from gammachains import classify_form, genus, quad_I, quad_I_nk, ref_beta, schneider
from gammachains.numerics import context

ctx = context(60)
for s in [Fraction(1), Fraction(3, 2), Fraction(7, 4), Fraction(2), Fraction(7)]:
    r = quad_I(s, 50)
    beta = 2 / (ctx.mpf(s.numerator) / s.denominator) * ctx.mpf(ref_beta(1 / s, Fraction(1, 2), 55))
    print(f"I_{s}: {ctx.nstr(r.value, 25)}  levels={r.levels} nodes={r.evaluations}"
          f"  |quad - beta| = {float(abs(r.value - beta)):.1e}")

# I_{n/k} as an integral of x^(k-1) dx / y on y^2 = 1 - x^n.
print()
print("I_{7/4} two ways:", ctx.nstr(quad_I_nk(7, 4, 40).value, 20),
      ctx.nstr(quad_I(Fraction(7, 4), 40).value, 20))

# Holomorphic for k <= genus(n), otherwise a pole at infinity.
print()
for n in (3, 5, 7, 8):
    kinds = "".join("H" if classify_form(n, k).holomorphic else "m" for k in range(1, n + 1))
    print(f"n={n}: genus {genus(n)}, forms k=1..{n}: {kinds}")

# Schneider's criterion covers every I_{n/k} except I_1 and I_2 = pi.
print()
for s in [Fraction(2), Fraction(3), Fraction(7, 4), Fraction(5, 2)]:
    print(f"I_{s}: {schneider(s).verdict.value}")
