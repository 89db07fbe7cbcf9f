"""Whole shifted inverse over any domain with a whole shift.

The iteration only needs a handful of operations from its domain, which
are supplied by a descriptor object (see :class:`ShiftDomain`).  Integers
(with carries) and polynomials (without) are the two instances shipped in
this package; matrix polynomials over a prime field exercise the
noncommutative case.

Iteration state is a pair ``(w, ell)`` where ``w`` approximates
``shinv_{k + places - offset}(v)``, ``k = precision(v) - 1`` and ``places``
is the number of base-b places ``w`` carries.  ``ell`` counts the places
known to be right; the remaining ``guard`` places absorb truncation error.
"""

from __future__ import annotations

import contextlib
import enum
from dataclasses import dataclass, field
from typing import Any, Protocol


class RefineVariant(str, enum.Enum):
    REFINE1 = "refine1"   # full-length iterates
    REFINE2 = "refine2"   # short iterates, precision roughly doubling
    REFINE3 = "refine3"   # short iterates and divisor prefixes

    def __str__(self):
        return self.value


@dataclass
class IterationStats:
    """Counters filled in by :func:`generic_refine` when passed one."""

    iterations: int = 0
    mults: int = 0
    ells: list = field(default_factory=list)
    prefixes: list = field(default_factory=list)
    iterates: list = field(default_factory=list)   # short iterates, guards included
    w0: Any = None          # initial value at full scale


_shadow = {"on": False, "counts": None}


@contextlib.contextmanager
def shadow_check():
    """Within the block every windowed residual (integer or polynomial) is
    compared with the full product.  Yields call counters, still readable
    after the block ends."""
    counts = {"calls": 0, "windowed": 0, "fallbacks": 0}
    saved = dict(_shadow)
    _shadow.update(on=True, counts=counts)
    try:
        yield counts
    finally:
        _shadow.update(saved)


class ShiftDomain(Protocol):
    """What :func:`generic_refine` needs from a domain.

    ``shortfall`` is the number of places lost per doubling step (1 when
    arithmetic carries, 0 otherwise) and ``guard`` the number of extra
    places carried by short iterates.  ``place_offset`` relates exponent
    to length: ``shinv_{k+j}(v)`` has ``j + place_offset`` places.
    """

    shortfall: int
    guard: int
    place_offset: int

    def precision(self, e) -> int: ...
    def shift(self, e, n: int): ...
    def mul(self, a, b): ...
    def sub(self, a, b): ...
    def initial_value(self, v, h: int) -> tuple[Any, int]: ...
    def small_case(self, v, h: int): ...
    def pow_diff(self, v, w, h: int, ell: int, g: int, window: int | None = None): ...
    def residual_times(self, w, r): ...
    def shift_residual(self, r, n: int): ...
    def add_residual(self, x, r): ...
    def next_window(self, r, h: int, v) -> int: ...
    def finish(self, w, v, h: int): ...
    def fix_quotient(self, u, v, q, side: str): ...


def step(domain, h: int, v, w, m: int, ell: int, g: int,
         window: int | None = None, stats: IterationStats | None = None):
    """One modified Newton step on ``shift(w, m)`` toward ``shinv_h(v)``.

    Only ``w`` itself is shifted; the residual ``b**(h-m) - v*w`` is formed
    at the unshifted scale so both products stay short.  Returns the new
    iterate together with that residual.
    """
    r = domain.pow_diff(v, w, h - m, ell, g, window=window)
    corr = domain.shift_residual(domain.residual_times(w, r), 2 * m - h)
    if stats is not None:
        stats.iterations += 1
        stats.mults += 2
    return domain.add_residual(domain.shift(w, m), corr), r


def _iteration_limit(places: int) -> int:
    return 4 * max(places, 2).bit_length() + 16


def generic_refine(domain, variant, v, h: int, state=None,
                   stats: IterationStats | None = None):
    """Refine an initial value to the exact whole shifted inverse ``shinv_h(v)``.

    ``state`` is ``(w, ell)`` as produced by ``domain.initial_value``; it is
    computed when omitted.  Special cases (``domain.small_case``) are the
    caller's business.
    """
    variant = RefineVariant(variant)
    k = domain.precision(v) - 1
    if state is None:
        state = domain.initial_value(v, h)
    w, ell = state
    off = domain.place_offset
    target = h - k + off
    if stats is not None:
        stats.w0 = domain.shift(w, target - ell)
        stats.ells.append(ell)
    if ell >= target:
        return domain.finish(domain.shift(w, target - ell), v, h)
    if variant is RefineVariant.REFINE1:
        return _refine_full(domain, v, h, w, ell, k, target, stats)

    d, g = domain.shortfall, domain.guard
    places = ell
    prefixes = variant is RefineVariant.REFINE3
    if g:
        # attach guard places; the head is only good to within one unit,
        # so the residual window gets one extra place of slack
        s = _prefix(k, ell, g) if prefixes else 0
        w, _ = step(domain, k - s + places + g - off, domain.shift(v, -s), w, g,
                    ell - 1, g, stats=stats)
        places += g
        _note(stats, ell, s, w)
    while ell < target:
        m = min(ell - d, target - ell)
        s = _prefix(k, ell, g) if prefixes else 0
        w, _ = step(domain, k - s + places + m - off, domain.shift(v, -s), w, m,
                    ell, g, stats=stats)
        places += m
        ell += m
        _note(stats, ell, s, w)
    if g:
        w = domain.shift(w, -g)
    return domain.finish(w, v, h)


def _prefix(k: int, ell: int, g: int) -> int:
    # low divisor places that cannot reach the next short iterate
    return max(0, k - (2 * ell + g) + 1)


def _note(stats, ell, s, w):
    if stats is not None:
        stats.ells.append(ell)
        stats.prefixes.append(s)
        stats.iterates.append(w)


def _refine_full(domain, v, h, w, ell, k, target, stats):
    off = domain.place_offset
    # one extra place when carries exist: the floor(u/v) - 1 fixed point
    # then only survives truncation in the rare case of a trailing zero
    places = target + (1 if domain.shortfall else 0)
    w = domain.shift(w, places - ell)
    hh = k + places - off
    window = None
    for _ in range(_iteration_limit(places)):
        w_new, r = step(domain, hh, v, w, 0, None, 0, window=window, stats=stats)
        if w_new == w:
            break
        window = domain.next_window(r, hh, v)
        w = w_new
    else:
        raise RuntimeError("full-length iteration did not reach a fixed point")
    return domain.finish(domain.shift(w, target - places), v, h)


def generic_shinv(domain, v, h: int, variant=RefineVariant.REFINE3,
                  stats: IterationStats | None = None):
    small = domain.small_case(v, h)
    if small is not None:
        return small
    return generic_refine(domain, variant, v, h, stats=stats)


def quo_right(u, v, domain, variant=RefineVariant.REFINE3):
    """q with u = q*v + r and r smaller than v."""
    h = max(domain.precision(u) - 1, 0)
    y = generic_shinv(domain, v, h, variant)
    q = domain.shift(domain.mul(u, y), -h)
    return domain.fix_quotient(u, v, q, "right")


def quo_left(u, v, domain, variant=RefineVariant.REFINE3):
    """q with u = v*q + r and r smaller than v."""
    h = max(domain.precision(u) - 1, 0)
    y = generic_shinv(domain, v, h, variant)
    q = domain.shift(domain.mul(y, u), -h)
    return domain.fix_quotient(u, v, q, "left")


# ---------------------------------------------------------------------------
# a noncommutative coefficient ring

class MatrixRing:
    """n-by-n matrices over a prime field, as tuples of row tuples.

    Multiplication does not commute, so polynomials over this ring give
    distinct left and right quotients.  ``inv`` raises ``ZeroDivisionError``
    on singular matrices.
    """

    commutative = False

    def __init__(self, field, n: int = 2):
        self.field = field
        self.n = n
        z, o = field.zero, field.one
        self.zero = tuple(tuple(z for _ in range(n)) for _ in range(n))
        self.one = tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))

    def __repr__(self):
        return f"MatrixRing({self.field!r}, {self.n})"

    def __eq__(self, other):
        return isinstance(other, MatrixRing) and (self.field, self.n) == (other.field, other.n)

    def __hash__(self):
        return hash(("M", self.field, self.n))

    def element(self, rows):
        f = self.field
        return tuple(tuple(f.element(x) for x in row) for row in rows)

    def is_zero(self, a):
        return a == self.zero

    def eq(self, a, b):
        return a == b

    def add(self, a, b):
        f = self.field
        return tuple(tuple(f.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

    def sub(self, a, b):
        f = self.field
        return tuple(tuple(f.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

    def neg(self, a):
        f = self.field
        return tuple(tuple(f.neg(x) for x in row) for row in a)

    def mul(self, a, b):
        f = self.field
        cols = list(zip(*b))
        out = []
        for row in a:
            r = []
            for col in cols:
                acc = f.zero
                for x, y in zip(row, col):
                    acc = f.add(acc, f.mul(x, y))
                r.append(acc)
            out.append(tuple(r))
        return tuple(out)

    def inv(self, a):
        f = self.field
        n = self.n
        m = [list(row) + list(e) for row, e in zip(a, self.one)]
        for col in range(n):
            piv = next((r for r in range(col, n) if not f.is_zero(m[r][col])), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            m[col], m[piv] = m[piv], m[col]
            s = f.inv(m[col][col])
            m[col] = [f.mul(s, x) for x in m[col]]
            for r in range(n):
                if r != col and not f.is_zero(m[r][col]):
                    c = m[r][col]
                    m[r] = [f.sub(x, f.mul(c, y)) for x, y in zip(m[r], m[col])]
        return tuple(tuple(row[n:]) for row in m)

    def random(self, rng):
        return self.element([[rng.randrange(self.field.p) for _ in range(self.n)]
                             for _ in range(self.n)])
