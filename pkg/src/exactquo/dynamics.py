"""Exact experiments on the integer Newton map and its real counterpart.

    S_R(x) = x * (2 - (v/u) x)
    S_Z(w) = w + floor(w * (u - v*w) / u)

Everything here runs on Python integers and ``fractions.Fraction``; the
only float is the constant in :func:`census_estimate`.
"""

from __future__ import annotations

import csv
import enum
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

Rational = Fraction

ESTIMATE_RATIO = (math.pi ** 2 - 5) / 6


# ---------------------------------------------------------------------------
# the maps

def s_z_map(u: int, v: int, w: int) -> int:
    return w + w * (u - v * w) // u


def s_z_hvw(base: int, h: int, v: int, w: int) -> int:
    """S_Z with u = base**h."""
    return s_z_map(base ** h, v, w)


def s_r_map(x, u: int, v: int) -> Fraction:
    x = Fraction(x)
    return x * (2 - Fraction(v, u) * x)


def s_r_iterate(x, u: int, v: int, i: int) -> Fraction:
    """i-fold S_R in closed form: (u/v) * (1 - (1 - (v/u) x)**(2**i))."""
    if i < 0:
        raise ValueError("negative iteration count")
    x = Fraction(x)
    r = Fraction(v, u)
    return (1 - (1 - r * x) ** (2 ** i)) / r


def s_r_apply(x, u: int, v: int, i: int) -> Fraction:
    """i-fold S_R by repeated application."""
    x = Fraction(x)
    for _ in range(i):
        x = s_r_map(x, u, v)
    return x


# ---------------------------------------------------------------------------
# fixed points

def _check(u, v):
    if not 1 < v < u:
        raise ValueError("need 1 < v < u")


def fixed_points(u: int, v: int) -> set[int]:
    """Fixed points of S_Z in [0, u/v], by scanning."""
    _check(u, v)
    return {w for w in range(u // v + 1) if s_z_map(u, v, w) == w}


def predicted_fixed_points(u: int, v: int) -> set[int]:
    n = u // v
    pts = {0, 1, n}
    if is_floor_minus_one_fixed(u, v):
        pts.add(n - 1)
    return pts


def is_floor_minus_one_fixed(u: int, v: int) -> bool:
    """Interval test: u/v in (1, 4) or in [j, j + 1/(j-2)) for some j >= 4."""
    _check(u, v)
    x = Fraction(u, v)
    if x < 4:
        return True
    j = u // v
    return x < j + Fraction(1, j - 2)


def _floor_minus_one_mask(u: int, vs: np.ndarray) -> np.ndarray:
    # same test, cleared of denominators: n < 4 or (n-2) u < (n-1)^2 v
    n = u // vs
    if u < 3_000_000_000:
        return (n < 4) | ((n - 2) * u < (n - 1) ** 2 * vs)
    out = n < 4
    big = ~out
    nn = n[big].astype(object)
    out[big] = np.array((nn - 2) * u < (nn - 1) ** 2 * vs[big].astype(object), dtype=bool)
    return out


def census_floor_minus_one(u: int, chunk: int = 1 << 20) -> int:
    """Number of 1 < v < u for which floor(u/v) - 1 is a fixed point."""
    if u <= 2:
        raise ValueError("need u > 2")
    total = 0
    for lo in range(2, u, chunk):
        vs = np.arange(lo, min(lo + chunk, u), dtype=np.int64)
        total += int(np.count_nonzero(_floor_minus_one_mask(u, vs)))
    return total


def census_estimate(u: int) -> int:
    """(pi**2 - 5)/6 * u, truncated to an integer."""
    if u <= 2:
        raise ValueError("need u > 2")
    return math.floor(ESTIMATE_RATIO * u)


@dataclass(frozen=True)
class CensusRow:
    u: int
    actual: int
    estimate: int

    @property
    def abs_err(self) -> int:
        return abs(self.actual - self.estimate)

    @property
    def rel_err(self) -> float:
        return self.abs_err / self.actual


def census_table(us) -> list[CensusRow]:
    return [CensusRow(u, census_floor_minus_one(u), census_estimate(u)) for u in us]


def format_rel_err(x: float) -> str:
    """Four significant digits, exponent without padding: 8.557e-3."""
    if x == 0:
        return "0"
    m, e = f"{x:.3e}".split("e")
    return f"{m}e{int(e)}"


def census_csv(rows, out=None) -> str:
    """CSV with columns u, actual, estimate, abs_err, rel_err."""
    buf = out if out is not None else io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(["u", "actual", "estimate", "abs_err", "rel_err"])
    for r in rows:
        wr.writerow([r.u, r.actual, r.estimate, r.abs_err, format_rel_err(r.rel_err)])
    return buf.getvalue() if out is None else ""


# ---------------------------------------------------------------------------
# traces

class Outcome(str, enum.Enum):
    FIXED_POINT = "fixed"
    DIVERGED = "diverged"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass
class IterationTrace:
    u: int
    v: int
    w0: int
    iterates: list = field(default_factory=list)
    outcome: Outcome = Outcome.BUDGET_EXCEEDED

    @property
    def steps(self) -> int:
        return len(self.iterates) - 1

    @property
    def limit(self):
        return self.iterates[-1] if self.outcome is Outcome.FIXED_POINT else None

    def __str__(self):
        chain = " → ".join(str(w) for w in self.iterates)
        if self.outcome is Outcome.FIXED_POINT:
            return f"{chain} (fixed)"
        if self.outcome is Outcome.DIVERGED:
            return f"{chain} diverged"
        return f"{chain} (budget exceeded)"

    def as_dict(self):
        return {"u": self.u, "v": self.v, "w0": self.w0, "iterates": list(self.iterates),
                "outcome": self.outcome.value, "steps": self.steps}


def default_budget(u: int, v: int) -> int:
    return 10 + 4 * fast_bound(max(u, 4 * v), v)


def fast_bound(u: int, v: int) -> int:
    """ceil(log2(log2(u/v))) for u/v >= 2, in exact arithmetic."""
    if u < 2 * v:
        raise ValueError("need u/v >= 2")
    c = 0
    while v << (1 << c) < u:
        c += 1
    return c


def steps_to_converge(u: int, v: int, w0: int, budget: int | None = None) -> IterationTrace:
    """Iterate S_Z from w0 until a fixed point, divergence or the budget.

    A negative iterate proves divergence: for w < 0 the map more than
    doubles |w|.  Starting points above floor(2u/v) go negative in one step.
    """
    if budget is None:
        budget = default_budget(u, v)
    tr = IterationTrace(u, v, w0, [w0])
    w = w0
    for _ in range(budget + 1):
        if w < 0:
            tr.outcome = Outcome.DIVERGED
            return tr
        nxt = s_z_map(u, v, w)
        if nxt == w:
            tr.outcome = Outcome.FIXED_POINT
            return tr
        tr.iterates.append(nxt)
        w = nxt
    tr.outcome = Outcome.BUDGET_EXCEEDED
    return tr


# ---------------------------------------------------------------------------
# short iterates and divisor prefixes

def leading(base: int, h: int, v: int, n_digits: int) -> int:
    """The leading n_digits of floor(base**h / v), k = prec(v) - 1."""
    k = _k(base, v)
    return (base ** h // v) // base ** (h - k - n_digits)


def _k(base, v):
    k = 0
    while base ** (k + 1) <= v:
        k += 1
    return k


def shift_extension_gap(base: int, h: int, v: int, ell: int) -> int:
    """w<2> - S_Z(k + 2 ell, v, w<1> * base**ell); in [0, base] by theory."""
    k = _k(base, v)
    if 2 * ell > h - k:
        raise ValueError("need 2*ell <= h - k")
    w1 = leading(base, h, v, ell)
    w2 = leading(base, h, v, 2 * ell)
    return w2 - s_z_hvw(base, k + 2 * ell, v, w1 * base ** ell)


def divisor_sensitivity(base: int, h: int, v: int, ell: int, delta: int) -> int:
    """Increase of S_Z(k + 2 ell, ., w<1> * base**ell) when v drops by delta."""
    k = _k(base, v)
    if 2 * ell > h - k:
        raise ValueError("need 2*ell <= h - k")
    w = leading(base, h, v, ell) * base ** ell
    hh = k + 2 * ell
    return s_z_hvw(base, hh, v - delta, w) - s_z_hvw(base, hh, v, w)
