"""The integer Newton map has its own dynamics.

S_Z(w) = w + floor(w (u - v w) / u) is not just a rounded real Newton
step: it can stall one below floor(u/v), and it blows up from starting
points past floor(2u/v).  This script walks through both.
"""

from fractions import Fraction

from exactquo import dynamics as D

u, v = 100, 7
for w0 in (11, 14, 0, 28, 29):
    print(f"w0={w0:>2}: {D.steps_to_converge(u, v, w0)}")

print("\nThe real map converges quadratically, in closed form:")
for i in range(5):
    x = D.s_r_iterate(Fraction(11), u, v, i)
    print(f"  i={i}  x={float(x):.12f}")

print("\nFixed points:")
for u, v in ((10, 3), (10, 4), (100, 9), (28, 7)):
    print(f"  u={u:>3} v={v}: {sorted(D.fixed_points(u, v))}"
          f"   floor-1 fixed: {D.is_floor_minus_one_fixed(u, v)}")

print("\nHow often is floor(u/v) - 1 a trap?  (count, estimate, error)")
print(D.census_csv(D.census_table([10, 100, 1000, 10 ** 4, 10 ** 5, 10 ** 6])), end="")

print("\nStarting within a quarter of u/v, the step count stays under ceil(log2 log2(u/v)):")
for u, v in ((10 ** 6, 3), (10 ** 12, 7), (2 ** 64, 3)):
    tr = D.steps_to_converge(u, v, 3 * u // (4 * v) + 1)
    print(f"  u/v ~ {u // v:.3e}: {tr.steps} steps, bound {D.fast_bound(u, v)}")
