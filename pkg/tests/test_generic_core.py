import pytest

from exactquo import int_shinv as I
from exactquo.bigdigits import Natural, shift
from exactquo.generic_core import (
    IterationStats, MatrixRing, RefineVariant, generic_refine, generic_shinv, quo_left, quo_right,
)
from exactquo.int_shinv import IntegerDomain
from exactquo.poly import DensePoly, PolyDomain, PrimeField, pdivmod, pshift, pshinv

F7 = PrimeField(7)
M2 = MatrixRing(F7, 2)


def test_integer_descriptor_example():
    # base 10 is regrouped to base 100 before refinement
    v = Natural.from_int(7, 100)
    assert int(generic_shinv(IntegerDomain(100), v, 3)) == 142857
    v = Natural.from_int(300, 16)
    for var in RefineVariant:
        assert int(generic_refine(IntegerDomain(16), var, v, 6)) == 16 ** 6 // 300


def test_polynomial_descriptor_example():
    v = DensePoly([1, 1], F7)
    assert generic_refine(PolyDomain(F7), "refine2", v, 3) == DensePoly([1, 6, 1], F7)


def test_shortfall_free_doubling():
    v = DensePoly([3, 1, 4, 1, 5], F7)
    st = IterationStats()
    generic_refine(PolyDomain(F7), "refine2", v, 4 + 63, stats=st)
    assert st.ells == [2, 4, 8, 16, 32, 64]


def test_integer_precision_law():
    v = Natural.from_int(3 ** 1000, 1 << 16)
    st = IterationStats()
    generic_refine(IntegerDomain(1 << 16), "refine2", v, 200, stats=st)
    # ells: start, after guard attach, then 2*ell - 1
    assert st.ells[:4] == [2, 2, 3, 5]


def test_specialization_matches_modules(rng):
    for _ in range(300):
        base = rng.choice([16, 256, 1 << 16])
        v = Natural.from_int(rng.randrange(base, base ** 8), base)
        h = rng.randrange(len(v.digits) + 2, 40)
        for var in RefineVariant:
            assert generic_refine(IntegerDomain(base), var, v, h) == I.shinv(v, h, var)


def test_non_monic_poly_without_normalizing(rng):
    F = PrimeField(97)
    for _ in range(100):
        v = DensePoly([rng.randrange(97) for _ in range(rng.randrange(1, 9))] + [rng.randrange(2, 97)], F)
        n = rng.randrange(0, 40)
        assert generic_shinv(PolyDomain(F), v, n) == pshinv(v, n)


def _mpoly(coeffs):
    return DensePoly([M2.element(c) for c in coeffs], M2)


def _random_unit(rng):
    while True:
        m = M2.random(rng)
        try:
            M2.inv(m)
            return m
        except ZeroDivisionError:
            pass


def test_matrix_ring_is_noncommutative():
    a = M2.element([[1, 2], [0, 1]])
    b = M2.element([[1, 0], [3, 1]])
    assert M2.mul(a, b) != M2.mul(b, a)
    assert M2.mul(a, M2.inv(a)) == M2.one
    with pytest.raises(ZeroDivisionError):
        M2.inv(M2.element([[1, 2], [2, 4]]))


def test_central_monomial_divisor(rng):
    b = DensePoly([M2.zero, M2.one], M2)
    dom = PolyDomain(M2)
    for _ in range(20):
        u = DensePoly([M2.random(rng) for _ in range(rng.randrange(1, 7))], M2)
        assert quo_right(u, b, dom) == pshift(u, -1)
        assert quo_left(u, b, dom) == pshift(u, -1)


def test_commutative_instance_left_equals_right(rng):
    F = PrimeField(97)
    dom = PolyDomain(F)
    for _ in range(50):
        u = DensePoly([rng.randrange(97) for _ in range(rng.randrange(1, 30))], F)
        v = DensePoly([rng.randrange(97) for _ in range(rng.randrange(0, 6))] + [3], F)
        q = pdivmod(u, v)[0]
        assert quo_left(u, v, dom) == quo_right(u, v, dom) == q


def test_matrix_left_and_right_quotients(rng):
    dom = PolyDomain(M2)
    differ = 0
    for _ in range(100):
        v = DensePoly([M2.random(rng) for _ in range(rng.randrange(0, 4))] + [_random_unit(rng)], M2)
        u = DensePoly([M2.random(rng) for _ in range(rng.randrange(0, 7))], M2)
        ql, qr = quo_left(u, v, dom), quo_right(u, v, dom)
        rl, rr = u - v * ql, u - qr * v
        assert v * ql + rl == u and qr * v + rr == u
        assert rl.degree < v.degree and rr.degree < v.degree
        differ += ql != qr
    assert differ > 50


def test_singular_leading_matrix_rejected():
    v = _mpoly([[[1, 0], [0, 1]], [[1, 2], [2, 4]]])
    with pytest.raises(ZeroDivisionError):
        quo_right(_mpoly([[[1, 0], [0, 1]]] * 4), v, PolyDomain(M2))
