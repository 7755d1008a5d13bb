# Computation chains for Gamma(p/q)
#
# Doubling an argument x in (0, 1) and dropping the integer part walks
# p/q -> 2p/q -> 4p/q ... (mod 1). For odd q the walk returns to +p/q or
# reaches -p/q = 1 - p/q after m steps, where m is the first power with
# 2^m = +1 or -1 (mod q). Even denominators first fall into an odd cycle.

from fractions import Fraction

from gammachains import minimal_chain, pm_order, render_chain

# The first nontrivial cases.
for p, q in [(1, 3), (1, 5), (2, 5), (1, 7), (3, 7)]:
    c = minimal_chain(p, q)
    print(f"{render_chain(c):60s} m={c.doublings} sign={c.sign:+d}")

# m is the +-order of 2 modulo q.
print()
for q in (3, 5, 7, 9, 11, 13, 15, 17, 23, 31):
    m, sign = pm_order(2, q)
    print(f"q={q:3d}: 2^{m} = {'+' if sign > 0 else '-'}1 (mod {q})")

# Even denominators: the 2-part of q is a pre-period before the cycle.
print()
for p, q in [(1, 2), (1, 4), (1, 6), (1, 12), (5, 24)]:
    c = minimal_chain(p, q)
    print(f"{render_chain(c):60s} closure={c.closure.value}, re-enters at index {c.reentry_index}")

# The visited fractions are all distinct until the closing hit.
c = minimal_chain(1, 23)
print()
print(f"1/23 visits {len(set(c.visited[:-1]))} distinct fractions before closing;"
      f" last = {c.visited[-1]} = 1 - {1 - c.visited[-1]}")
assert c.visited[-1] in (Fraction(1, 23), Fraction(22, 23))
