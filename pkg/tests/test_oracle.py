import pytest

from exactquo.bigdigits import Natural
from exactquo.oracle import poly_longdiv, reverse_newton_divmod, school_divmod
from exactquo.poly import DensePoly, PrimeField
from conftest import nat

F5, F7 = PrimeField(5), PrimeField(7)


def test_school_divmod_examples():
    assert tuple(map(int, school_divmod(nat(10 ** 6), nat(7)))) == (142857, 1)
    assert tuple(map(int, school_divmod(nat(98765), nat(1)))) == (98765, 0)
    assert tuple(map(int, school_divmod(nat(5), nat(7)))) == (0, 5)
    with pytest.raises(ZeroDivisionError):
        school_divmod(nat(5), nat(0))


@pytest.mark.parametrize("base", [2, 10, 16, 1 << 16, 1 << 32])
def test_school_divmod_random(base, rng):
    for _ in range(300):
        u = rng.randrange(base ** rng.randrange(1, 25))
        v = rng.randrange(1, base ** rng.randrange(1, 12))
        q, r = school_divmod(Natural.from_int(u, base), Natural.from_int(v, base))
        assert (int(q), int(r)) == divmod(u, v)


def test_poly_oracles_examples():
    u, v = DensePoly([1, 2, 0, 1], F5), DensePoly([1, 1], F5)
    assert poly_longdiv(u, v) == (DensePoly([3, 4, 1], F5), DensePoly([3], F5))
    assert poly_longdiv(v, v) == (DensePoly([1], F5), DensePoly([], F5))
    assert poly_longdiv(DensePoly([], F5), v) == (DensePoly([], F5), DensePoly([], F5))
    x3 = DensePoly([0, 0, 0, 1], F7)
    assert reverse_newton_divmod(x3, DensePoly([1, 1], F7)) == \
        (DensePoly([1, -1, 1], F7), DensePoly([-1], F7))
    assert reverse_newton_divmod(v, u) == (DensePoly([], F5), v)


def test_poly_oracles_agree(rng):
    for F in (PrimeField(2), F5, PrimeField(97)):
        for _ in range(300):
            u = DensePoly([rng.randrange(F.p) for _ in range(rng.randrange(0, 25))], F)
            v = DensePoly([rng.randrange(F.p) for _ in range(rng.randrange(0, 9))]
                          + [rng.randrange(1, F.p)], F)
            assert poly_longdiv(u, v) == reverse_newton_divmod(u, v)
