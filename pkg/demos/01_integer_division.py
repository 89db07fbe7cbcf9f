"""Dividing integers without leaving the integers.

floor(B**h / v) is the stand-in for 1/v.  We watch it being built from a
two-digit head, the short iterates gaining digits, and then use it to divide.
"""

from exactquo import int_shinv as I
from exactquo.bigdigits import Natural
from exactquo.generic_core import IterationStats, RefineVariant
from exactquo.oracle import school_divmod

# A small case first, in base 16 so no regrouping happens.
v = Natural.from_int(300, 16)
stats = IterationStats()
w = I.shinv(v, 6, "refine3", stats=stats)
print("floor(16**6 / 300) =", int(w), "  (direct:", 16 ** 6 // 300, ")")
print("start value        =", int(stats.w0))
print("correct digits     =", stats.ells)

# Each variant gives the same inverse.
for var in RefineVariant:
    print(f"{var.value}: {int(I.shinv(v, 6, var))}")

# One Newton step by hand, base 10: from 10 toward 100/7.
print("\nstep(2, 7, 10) ->", int(I.step(2, Natural.from_int(7, 10), Natural.from_int(10, 10))))

# The product v*w sits just below or above B**h, so its low digits suffice.
v, w = Natural.from_int(89, 10), Natural.from_int(112, 10)
print("10**4 - 89*112 =", int(I.pow_diff(v, w, 4)))

# Division: q is the top half of u*shinv(v), plus at most one.
u = Natural.from_int(3 ** 200, 1 << 32)
v = Natural.from_int(7 ** 50 + 12345, 1 << 32)
q, r, delta = I.divmod_delta(u, v)
qs, rs = school_divmod(u, v)
print(f"\nu has {len(u.digits)} words, v has {len(v.digits)}")
print("delta =", delta, " agrees with long division:", (q, r) == (qs, rs))

# Many dividends against one divisor: compute the inverse once.
v = Natural.from_int(987654321, 10)
h = 20
y = I.shinv(v, h)
for x in (10 ** 19, 123456789012345678, 5 * 10 ** 18 + 7):
    q, r, d = I.divmod_delta(Natural.from_int(x, 10), v, inverse=(h, y))
    print(f"{x} = {int(q)} * 987654321 + {int(r)}   (delta {d})")
