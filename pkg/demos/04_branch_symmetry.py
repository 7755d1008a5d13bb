# Straight-line integrals between branch points of y^2 = 1 - x^n
#
# Compare int_1^zeta dx/sqrt(1 - x^n) along the chord from 1 to
# zeta = exp(2 pi i / n) with (1 - zeta) int_0^1 dx/sqrt(1 - x^n), using
# the principal square root everywhere. The moduli agree; the ratio's phase
# is reported, not assumed.

from gammachains import symmetry_ratio
from gammachains.numerics import context

ctx = context(40)
for n in range(2, 9):
    ratio, branch, period = symmetry_ratio(n, 40)
    print(f"n={n}: ratio = {ctx.nstr(ratio, 12)}, |ratio| - 1 = {float(abs(ratio) - 1):.1e},"
          f" phase/pi = {float(ctx.arg(ratio) / ctx.pi):+.3f}")
