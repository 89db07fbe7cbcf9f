import itertools

import pytest
from hypothesis import given, strategies as st

from exactquo.generic_core import IterationStats, RefineVariant
from exactquo.oracle import poly_longdiv, reverse_newton_divmod
from exactquo.poly import (
    DensePoly, PrimeField, parse_poly, pdivmod, ppow_diff, pshift, pshinv, shadow_check,
)

F2, F5, F7, F97 = PrimeField(2), PrimeField(5), PrimeField(7), PrimeField(97)


def P(coeffs, field=F7):
    return DensePoly(coeffs, field)


def test_pshift_examples():
    p = P([1, 1, 1])
    assert pshift(p, 1) == P([0, 1, 1, 1])
    assert pshift(p, -1) == P([1, 1])
    assert pshift(p, -3) == P([])


def test_pshinv_examples():
    assert pshinv(P([1, 1]), 3) == P([1, 6, 1])
    assert pshinv(P([0, 0, 1]), 4) == P([0, 0, 1])
    assert pshinv(P([3, 1, 2]), 2) == P([F7.inv(2)])
    with pytest.raises(ZeroDivisionError):
        pshinv(P([]), 3)


def test_pdivmod_examples():
    u, v = parse_poly("1,2,0,1 @ F5"), parse_poly("1,1 @ F5")
    assert pdivmod(u, v) == (parse_poly("3,4,1 @ F5"), parse_poly("3 @ F5"))
    assert pdivmod(u, u) == (P([1], F5), P([], F5))
    assert pdivmod(P([1], F5), v) == (P([], F5), P([1], F5))
    with pytest.raises(ZeroDivisionError):
        pdivmod(u, P([], F5))


def test_ppow_diff_examples():
    v, w = P([1, 1]), P([1, 6, 1])
    assert ppow_diff(v, w, 3) == P([6])
    assert ppow_diff(P([0, 1]), P([0, 0, 1]), 3) == P([])
    assert ppow_diff(v, P([]), 4) == P([0, 0, 0, 0, 1])
    # windowed: only the low product terms are formed
    assert ppow_diff(v, w, 3, window=0) == P([6])


def test_text_format():
    p = parse_poly("1,2,0,1 @ F5")
    assert p.coeffs == (1, 2, 0, 1) and p.ring == F5
    assert str(p) == "1,2,0,1 @ F5"
    assert parse_poly("3,4", F5) == P([3, 4], F5)
    assert P([], F5).coeff_str() == "0"
    with pytest.raises(ValueError):
        parse_poly("1,2 @ F6")
    with pytest.raises(ValueError):
        parse_poly("1,2")
    with pytest.raises(ValueError):
        parse_poly("1,2 @ F5", F7)


def test_dense_poly_invariants():
    p = P([1, 2, 0, 0])
    assert p.coeffs == (1, 2) and p.degree == 1 and p.prec == 2
    assert P([]).degree == -1
    assert P([8, -1]).coeffs == (1, 6)
    with pytest.raises(AttributeError):
        p.coeffs = ()


def test_prime_field_axioms(rng):
    for F in (F2, F5, F97, PrimeField((1 << 61) - 1)):
        for _ in range(200):
            a, b, c = (F.random(rng) for _ in range(3))
            assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
            assert F.add(a, F.neg(a)) == 0
            if a:
                assert F.mul(a, F.inv(a)) == 1
    with pytest.raises(ValueError):
        PrimeField(91)
    with pytest.raises(ZeroDivisionError):
        F5.inv(0)


def _polys(F, max_deg):
    for d in range(-1, max_deg + 1):
        if d < 0:
            yield P([], F)
            continue
        for tail in itertools.product(range(F.p), repeat=d):
            for lc in range(1, F.p):
                yield P(list(tail) + [lc], F)


def test_exhaustive_small_f5(rng):
    polys = list(_polys(F5, 2))
    # long dividends so the windowed residual actually runs
    dividends = polys + [P([rng.randrange(5) for _ in range(rng.randrange(6, 12))], F5)
                         for _ in range(150)]
    with shadow_check() as counts:
        for u in dividends:
            for v in polys[1:]:
                expect = poly_longdiv(u, v)
                for var in RefineVariant:
                    assert pdivmod(u, v, var) == expect
    assert counts["calls"] > 0 and counts["windowed"] > 0


@pytest.mark.parametrize("variant", list(RefineVariant))
def test_exact_doubling_against_truncated_quotients(variant, rng):
    for _ in range(40):
        k = rng.randrange(1, 30)
        v = P([rng.randrange(97) for _ in range(k)] + [rng.randrange(1, 97)], F97)
        n = k + rng.randrange(3, 200)
        st_ = IterationStats()
        pshinv(v, n, variant, st_)
        if variant is RefineVariant.REFINE1:
            continue
        assert st_.ells[0] == 2
        for a, b in zip(st_.ells, st_.ells[1:]):
            assert b == 2 * a or b == n - k + 1
        for ell, w in zip(st_.ells[1:], st_.iterates):
            # every coefficient of every short iterate is already right
            monic_q = poly_longdiv(pshift(P([1], F97), k + ell - 1), v.scale(F97.inv(v.lc())))[0]
            assert w == monic_q


@given(st.lists(st.integers(0, 96), max_size=60), st.lists(st.integers(0, 96), max_size=30),
       st.integers(1, 96))
def test_pdivmod_random_f97(uc, vc, lc):
    u, v = P(uc, F97), P(vc + [lc], F97)
    q, r = pdivmod(u, v)
    assert q * v + r == u
    assert r.degree < v.degree
    assert (q, r) == poly_longdiv(u, v) == reverse_newton_divmod(u, v)


def test_large_degree_f97(rng):
    for _ in range(10):
        u = P([rng.randrange(97) for _ in range(513)], F97)
        v = P([rng.randrange(97) for _ in range(rng.randrange(1, 400))] + [5], F97)
        q, r = pdivmod(u, v)
        assert q * v + r == u and r.degree < v.degree
