"""The same iteration for polynomials, where there are no carries.

Over a field every Newton step exactly doubles the number of correct terms
and no guard terms are needed.  The generic driver also runs over 2x2
matrices, where left and right quotients differ.
"""

import random

from exactquo.generic_core import IterationStats, MatrixRing, quo_left, quo_right
from exactquo.oracle import poly_longdiv
from exactquo.poly import DensePoly, PolyDomain, PrimeField, parse_poly, pdivmod, pshinv

u = parse_poly("1,2,0,1 @ F5")
v = parse_poly("1,1 @ F5")
q, r = pdivmod(u, v)
print(f"({u}) quo ({v}) = {q.coeff_str()}, remainder {r.coeff_str()}")

F = PrimeField(97)
rng = random.Random(3)
v = DensePoly([rng.randrange(97) for _ in range(10)] + [1], F)
st = IterationStats()
w = pshinv(v, 10 + 500, "refine2", st)
print("\nx**510 quo v over F97, correct terms per step:", st.ells)
u = DensePoly([0] * 510 + [1], F)
print("matches long division:", w == poly_longdiv(u, v)[0])

M = MatrixRing(F, 2)


def unit():
    while True:
        m = M.random(rng)
        try:
            M.inv(m)
            return m
        except ZeroDivisionError:
            pass


v = DensePoly([M.random(rng), unit()], M)
u = DensePoly([M.random(rng) for _ in range(4)], M)
dom = PolyDomain(M)
ql, qr = quo_left(u, v, dom), quo_right(u, v, dom)
print("\n2x2 matrix polynomials over F97:")
print("  left and right quotients equal?", ql == qr)
print("  u - v*qL has degree", (u - v * ql).degree, "; u - qR*v has degree", (u - qr * v).degree)
