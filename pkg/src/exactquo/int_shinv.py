"""Exact integer division through the whole shifted inverse floor(B**h / v).

The inverse is refined by the modified Newton map

    w -> w + floor(w * (B**h - v*w) / B**h)

which never leaves the integers.  Three refinement schedules are offered
(see :class:`RefineVariant`); the control flow lives in
:mod:`exactquo.generic_core`, this module only supplies the integer
descriptor plus the pieces that are specific to carries: the initial value,
the close-product residual and the final one-unit corrections.
"""

from __future__ import annotations

import builtins
from dataclasses import dataclass

from .bigdigits import (
    DEFAULT_BACKEND, MultBackend, Natural, Signed, add, cmp, divmod_digit,
    is_power_of_base, mult, mult_mod, one, power, prec, shift, sub, zero,
)
from .generic_core import (
    IterationStats, RefineVariant, _shadow, generic_refine, generic_shinv,
    shadow_check,
)
from .generic_core import step as _generic_step

__all__ = [
    "GUARD_DIGITS", "IntegerDomain", "IterationStats", "RefineVariant",
    "ShinvState", "divmod", "divmod_delta", "final_correction",
    "initial_value", "pow_diff", "quotient_exponent", "refine1", "refine2", "refine3",
    "shadow_check", "shinv", "step",
]

GUARD_DIGITS = 2
MIN_BASE = 16


class CloseProductError(ArithmeticError):
    """A product was not as close to the power of B as the caller promised."""


# --------------------------------------------------------------------------
# close products

def _full_diff(v, w, h, backend):
    return Signed.diff(power(v.base, h), mult(v, w, backend))


def pow_diff(v: Natural, w: Natural, h: int, ell: int | None = None,
             g: int = GUARD_DIGITS, backend: MultBackend | None = None,
             window: int | None = None, fallback: bool = True) -> Signed:
    """B**h - v*w, from the low digits of v*w when the product is close to B**h.

    The caller promises |B**h - v*w| < B**e with e = k + t - ell + g
    (k, t the digit counts of v, w less one), or passes ``window=e``
    directly.  ``ell=None`` asks for the plain full computation.  The digit
    at position e of the truncated product is a sentinel: 0 means the
    product overshot, B-1 that it fell short.  Anything else breaks the
    promise and triggers the full product (or CloseProductError when
    ``fallback`` is off).
    """
    base = v.base
    if window is not None:
        e = window
    elif ell is None:
        e = h
    else:
        e = prec(v) - 1 + max(prec(w) - 1, 0) - ell + g
    e = max(e, 0)
    if e + 1 >= h:
        r = _full_diff(v, w, h, backend)
    else:
        p = mult_mod(v, w, e + 1, backend)
        top = p.digits[e] if len(p.digits) > e else 0
        if top == 0:
            r = Signed(True, p)
        elif top == base - 1:
            r = Signed(False, sub(power(base, e + 1), p))
        elif fallback:
            r = _full_diff(v, w, h, backend)
            if _shadow["on"]:
                _shadow["counts"]["fallbacks"] += 1
        else:
            raise CloseProductError(f"sentinel digit {top} at position {e}")
        if _shadow["on"]:
            _shadow["counts"]["windowed"] += 1
    if _shadow["on"]:
        _shadow["counts"]["calls"] += 1
        full = _full_diff(v, w, h, backend)
        if int(full) != int(r):
            raise AssertionError(f"pow_diff mismatch: {int(r)} != {int(full)}")
    return r


# --------------------------------------------------------------------------
# descriptor

@dataclass(frozen=True)
class IntegerDomain:
    """Base-B naturals for :mod:`exactquo.generic_core`."""

    base: int
    backend: MultBackend = DEFAULT_BACKEND
    shortfall: int = 1
    guard: int = GUARD_DIGITS
    place_offset: int = 0

    def precision(self, e):
        return prec(e)

    def shift(self, e, n):
        return shift(e, n)

    def mul(self, a, b):
        return mult(a, b, self.backend)

    def sub(self, a, b):
        return sub(a, b)

    def initial_value(self, v, h):
        # a head with two places: approximates floor(B**(k+2) / v)
        k = prec(v) - 1
        if k < 1 or v.base < MIN_BASE:
            raise ValueError("initial value needs B >= 16 and v >= B")
        f = min(k, 2)
        big_v = int(shift(v, f - k))
        return Natural.from_int(v.base ** (f + 2) // big_v, v.base), 2

    def small_case(self, v, h):
        return _small_case(v, h)

    def pow_diff(self, v, w, h, ell, g, window=None):
        return pow_diff(v, w, h, ell, g, self.backend, window=window)

    def residual_times(self, w, r):
        return r.times(w, self.backend)

    def shift_residual(self, r, n):
        return r.floor_shift(n)

    def add_residual(self, x, r):
        return r.add_to(x)

    def next_window(self, r, h, v):
        # |D'| <= D**2 / B**h + v
        return max(2 * prec(r.mag) - h, prec(v)) + 1

    def finish(self, w, v, h):
        return final_correction(w, v, h, self.backend)

    def fix_quotient(self, u, v, q, side):
        r = sub(u, mult(q, v, self.backend))
        return add(q, one(u.base)) if cmp(r, v) >= 0 else q


# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ShinvState:
    """Iterate ``w`` (at full scale, i.e. close to B**h / v) with ``ell``
    correct leading digits; ``g`` guard digits are used while refining."""

    w: Natural
    ell: int
    h: int
    k: int
    g: int = GUARD_DIGITS

    def head(self) -> Natural:
        return shift(self.w, self.ell - (self.h - self.k))


def _small_case(v: Natural, h: int):
    base = v.base
    if not v:
        raise ZeroDivisionError("shifted inverse of zero")
    if h < 0:
        raise ValueError("negative shift exponent")
    k = prec(v) - 1
    if k > h:
        return zero(base)
    bh = power(base, h)
    c = cmp(v, bh)
    if c > 0:
        return zero(base)
    if c == 0 or cmp(add(v, v), bh) > 0:
        return one(base)
    if is_power_of_base(v):
        return power(base, h - k)
    if k == 0:
        return divmod_digit(bh, v.digits[0])[0]
    return None


def initial_value(v: Natural, h: int) -> tuple[Natural, int]:
    """Start value for the refinement, within a quarter of B**h / v.

    Inverts the leading min(k, 2) + 1 digits of v only.
    """
    if v.base < MIN_BASE:
        raise ValueError("initial value needs B >= 16; regroup digits first")
    if cmp(v, Natural.from_int(v.base, v.base)) < 0 or cmp(add(v, v), power(v.base, h)) > 0:
        raise ValueError("initial value needs B <= v and 2v <= B**h")
    head, ell = IntegerDomain(v.base).initial_value(v, h)
    return shift(head, h - prec(v) + 1 - ell), ell


def step(h: int, v: Natural, w: Natural, m: int = 0, ell: int | None = None,
         backend: MultBackend | None = None, g: int = GUARD_DIGITS) -> Natural:
    """S_Z(h, v, shift(w, m)), shifting only w itself.

    With ``ell`` given the residual is taken from the low product digits
    (the caller vouches that w carries ell correct digits).
    """
    dom = IntegerDomain(v.base, backend or DEFAULT_BACKEND)
    return _generic_step(dom, h, v, w, m, ell, g)[0]


def final_correction(w: Natural, v: Natural, h: int,
                     backend: MultBackend | None = None) -> Natural:
    """Move w by single units until 0 <= B**h - v*w < v."""
    base = v.base
    u1 = one(base)
    r = Signed.diff(power(base, h), mult(v, w, backend))
    while r.neg and r.mag:
        w = sub(w, u1)
        if cmp(r.mag, v) <= 0:
            r = Signed(False, sub(v, r.mag))
        else:
            r = Signed(True, sub(r.mag, v))
    while cmp(r.mag, v) >= 0:
        w = add(w, u1)
        r = Signed(False, sub(r.mag, v))
    return w


# --------------------------------------------------------------------------
# regrouping small bases

def _group(v: Natural, p: int) -> Natural:
    b = v.base
    d = v.digits
    out = []
    for i in range(0, len(d), p):
        acc = 0
        for j, x in enumerate(d[i:i + p]):
            acc += x * b ** j
        out.append(acc)
    return Natural(out, b ** p)


def _ungroup(v: Natural, base: int, p: int) -> Natural:
    out = []
    for x in v.digits:
        for _ in range(p):
            x, r = builtins.divmod(x, base)
            out.append(r)
    return Natural(out, base)


def _group_width(base: int) -> int:
    p = 1
    while base ** p < MIN_BASE:
        p += 1
    return p


# --------------------------------------------------------------------------

def _refine(variant, state: ShinvState, v: Natural, backend, stats=None):
    if v.base < MIN_BASE:
        raise ValueError("refinement needs B >= 16; use shinv for small bases")
    if state.h - state.k <= state.ell:
        return final_correction(state.w, v, state.h, backend)
    dom = IntegerDomain(v.base, backend or DEFAULT_BACKEND)
    return generic_refine(dom, variant, v, state.h, (state.head(), state.ell), stats)


def _state(v, h):
    w, ell = initial_value(v, h)
    return ShinvState(w, ell, h, prec(v) - 1)


def refine1(state: ShinvState, v: Natural, backend=None, stats=None) -> Natural:
    """Full-length iterates, one extra digit of headroom."""
    return _refine(RefineVariant.REFINE1, state, v, backend, stats)


def refine2(state: ShinvState, v: Natural, backend=None, stats=None) -> Natural:
    """Short iterates: ell correct digits plus two guards, ell -> 2*ell - 1."""
    return _refine(RefineVariant.REFINE2, state, v, backend, stats)


def refine3(state: ShinvState, v: Natural, backend=None, stats=None) -> Natural:
    """Short iterates against divisor prefixes."""
    return _refine(RefineVariant.REFINE3, state, v, backend, stats)


def shinv(v: Natural, h: int, variant=RefineVariant.REFINE3,
          backend: MultBackend | None = None,
          stats: IterationStats | None = None) -> Natural:
    """floor(B**h / v) for v >= 1, h >= 0."""
    base = v.base
    if base < MIN_BASE:
        small = _small_case(v, h)
        if small is not None:
            return small
        p = _group_width(base)
        hh = -(-h // p)
        w = shinv(_group(v, p), hh, variant, backend, stats)
        return shift(_ungroup(w, base, p), h - p * hh)
    dom = IntegerDomain(base, backend or DEFAULT_BACKEND)
    return generic_shinv(dom, v, h, variant, stats)


def quotient_exponent(u: Natural) -> int:
    """Smallest h with u <= B**h."""
    h = prec(u)
    if h and is_power_of_base(u):
        h -= 1
    return h


def divmod_delta(u: Natural, v: Natural, variant=RefineVariant.REFINE3,
                 backend: MultBackend | None = None,
                 stats: IterationStats | None = None, inverse=None):
    """(q, r, delta): delta is the unit added to shift(u*shinv(v), -h).

    ``inverse`` may carry a precomputed pair (h, shinv_h(v)) with
    u <= B**h, for dividing many u by the same v.
    """
    base = u.base
    if not v:
        raise ZeroDivisionError("division by zero")
    if inverse is None:
        h = quotient_exponent(u)
        y = shinv(v, h, variant, backend, stats)
    else:
        h, y = inverse
    q = shift(mult(u, y, backend), -h)
    r = sub(u, mult(q, v, backend))
    delta = 0
    if cmp(r, v) >= 0:
        q = add(q, one(base))
        r = sub(r, v)
        delta = 1
    return q, r, delta


def divmod(u: Natural, v: Natural, variant=RefineVariant.REFINE3,
           backend: MultBackend | None = None) -> tuple[Natural, Natural]:
    """(u quo v, u rem v)."""
    q, r, _ = divmod_delta(u, v, variant, backend)
    return q, r
