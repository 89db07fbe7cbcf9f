import io
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from exactquo import dynamics as D


def test_s_z_examples():
    assert D.s_z_map(100, 7, 10) == 13
    assert D.s_z_map(100, 7, 0) == 0
    assert D.s_z_map(10, 3, 3) == 3
    assert D.s_z_hvw(10, 2, 7, 13) == 14


def test_s_r_examples():
    assert D.s_r_iterate(Fraction(5, 3), 10, 3, 0) == Fraction(5, 3)
    assert D.s_r_iterate(Fraction(10, 3), 10, 3, 4) == Fraction(10, 3)
    assert D.s_r_iterate(1, 4, 2, 1) == Fraction(3, 2) == D.s_r_apply(1, 4, 2, 1)
    with pytest.raises(ValueError):
        D.s_r_iterate(1, 4, 2, -1)


@given(st.fractions(min_value=-3, max_value=3, max_denominator=50),
       st.integers(3, 200), st.integers(2, 199), st.integers(0, 6))
def test_closed_form_equals_repeated_map(x, u, v, i):
    assert D.s_r_iterate(x, u, v, i) == D.s_r_apply(x, u, v, i)


def test_fixed_point_examples():
    assert D.fixed_points(10, 3) == {0, 1, 2, 3}
    assert D.fixed_points(10, 4) == {0, 1, 2}
    assert D.fixed_points(100, 9) == {0, 1, 11}
    assert D.is_floor_minus_one_fixed(10, 3)
    assert not D.is_floor_minus_one_fixed(100, 9)
    for j in range(4, 30):
        assert D.is_floor_minus_one_fixed(7 * j, 7)
    with pytest.raises(ValueError):
        D.fixed_points(5, 5)


def test_fixed_point_law_small():
    for u in range(3, 400):
        for v in range(2, u):
            pts = D.fixed_points(u, v)
            assert pts == D.predicted_fixed_points(u, v)
            n = u // v
            direct = D.s_z_map(u, v, n - 1) == n - 1
            assert D.is_floor_minus_one_fixed(u, v) == direct


def test_mask_matches_exact_predicate():
    import numpy as np
    for u in (10, 97, 1000, 4_000_000_123):
        vs = np.arange(2, min(u, 3000), dtype=np.int64)
        mask = D._floor_minus_one_mask(u, vs)
        assert [bool(b) for b in mask] == [D.is_floor_minus_one_fixed(u, int(v)) for v in vs]


def test_census_examples():
    assert [D.census_floor_minus_one(10 ** i) for i in (1, 2, 3)] == [8, 85, 818]
    assert [D.census_estimate(10 ** i) for i in (1, 3, 4)] == [8, 811, 8116]
    brute = sum(D.is_floor_minus_one_fixed(777, v) for v in range(2, 777))
    assert D.census_floor_minus_one(777) == brute
    # chunking does not change the count
    assert D.census_floor_minus_one(5000, chunk=37) == D.census_floor_minus_one(5000)


def test_census_csv():
    rows = D.census_table([10, 100, 1000])
    text = D.census_csv(rows)
    lines = text.splitlines()
    assert lines[0] == "u,actual,estimate,abs_err,rel_err"
    assert lines[3] == "1000,818,811,7,8.557e-3"
    buf = io.StringIO()
    D.census_csv(rows, buf)
    assert buf.getvalue() == text
    assert D.format_rel_err(0.04706) == "4.706e-2"
    assert D.format_rel_err(0) == "0"


def test_trace_examples():
    t = D.steps_to_converge(100, 7, 14)
    assert t.outcome is D.Outcome.FIXED_POINT and t.limit == 14 and t.steps == 0
    t = D.steps_to_converge(100, 7, 11)
    assert t.iterates == [11, 13, 14] and t.steps == 2 <= D.fast_bound(100, 7) == 2
    assert str(t) == "11 → 13 → 14 (fixed)"
    t = D.steps_to_converge(100, 7, 29)
    assert t.outcome is D.Outcome.DIVERGED and t.limit is None
    assert str(t).endswith("diverged")
    t = D.steps_to_converge(100, 7, 1, budget=0)
    assert t.outcome is D.Outcome.FIXED_POINT
    d = D.steps_to_converge(100, 7, 11).as_dict()
    assert d["outcome"] == "fixed" and d["steps"] == 2


def test_trace_budget():
    t = D.steps_to_converge(10 ** 6, 3, 2, budget=3)
    assert t.outcome is D.Outcome.BUDGET_EXCEEDED and len(t.iterates) == 5


def test_fast_bound_exact():
    for u in range(4, 3000, 7):
        for v in range(2, u // 2 + 1, 3):
            expect = math.ceil(math.log2(math.log2(u / v))) if u > 2 * v else 0
            # float only as a cross-check away from exact powers
            if abs(math.log2(math.log2(u / v)) - round(math.log2(math.log2(u / v)))) > 1e-9:
                assert D.fast_bound(u, v) == expect


def test_convergence_dichotomy_small():
    for u in range(3, 80):
        for v in range(2, u):
            n, top = u // v, 2 * u // v
            for w0 in range(0, top + 6):
                t = D.steps_to_converge(u, v, w0)
                assert (t.outcome is D.Outcome.FIXED_POINT) == (w0 <= top)
                assert t.outcome is not D.Outcome.BUDGET_EXCEEDED
                if t.limit is not None:
                    assert t.limit in {0, 1, n - 1, n}
                    if 2 <= w0 <= n:
                        assert t.limit in {n - 1, n}


def test_fast_convergence_small():
    for u in range(4, 300):
        for v in range(2, u // 2 + 1):
            n = u // v
            c = D.fast_bound(u, v)
            lo, hi = -(-3 * u // (4 * v)), 5 * u // (4 * v)
            for w0 in range(lo, hi + 1):
                t = D.steps_to_converge(u, v, w0)
                assert t.steps <= c and t.limit in {n - 1, n}


def test_shift_extension_examples():
    for v in (123, 4567, 99999):
        for ell in (1, 2, 3):
            g = D.shift_extension_gap(10, 12 + 2 * ell, v, ell)
            assert 0 <= g <= 10
    with pytest.raises(ValueError):
        D.shift_extension_gap(10, 5, 123, 2)
    assert D.leading(10, 6, 7, 3) == 142
