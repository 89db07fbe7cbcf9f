"""Dense univariate polynomials and their whole shifted inverse x**n quo v.

Coefficients come from a ring object with ``zero``, ``one``, ``add``,
``sub``, ``neg``, ``mul``, ``inv``, ``is_zero`` and ``element``; prime
fields are provided by :class:`PrimeField`.  Without carries the Newton
step doubles the number of correct terms exactly, so no guard terms are
needed.  Text form, low to high: ``"1,2,0,1 @ F5"`` is 1 + 2x + x**3 over F5.
"""

from __future__ import annotations

import numpy as np

from .generic_core import (
    IterationStats, RefineVariant, _shadow, generic_shinv, shadow_check,
)

__all__ = [
    "DensePoly", "PolyDomain", "PrimeField", "parse_poly", "pdivmod",
    "ppow_diff", "pshift", "pshinv", "shadow_check",
]

_I64_LIMIT = 1 << 62


def _is_prime(n: int) -> bool:
    # Miller-Rabin with the first twelve primes as witnesses: exact below 3e24
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    if n in small:
        return True
    if n < 2 or any(n % q == 0 for q in small):
        return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d, s = d // 2, s + 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """Integers mod a prime p < 2**61."""

    commutative = True
    zero = 0
    one = 1

    def __init__(self, p: int):
        if not 2 <= p < 1 << 61 or not _is_prime(p):
            raise ValueError(f"{p} is not a supported prime")
        self.p = p

    def __repr__(self):
        return f"F{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def element(self, x) -> int:
        return int(x) % self.p

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def random(self, rng):
        return rng.randrange(self.p)

    def convolve(self, a, b):
        """Coefficients of the product, reduced mod p."""
        n = min(len(a), len(b))
        if n * (self.p - 1) ** 2 < _I64_LIMIT and n > 8:
            c = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
            return [int(x) for x in c % self.p]
        return [x % self.p for x in _conv(a, b, 0, int.__add__, int.__mul__)]


def _conv(a, b, zero, add, mul):
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = add(out[i + j], mul(x, y))
    return out


class DensePoly:
    """Coefficient tuple, index i holds the coefficient of x**i."""

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs=(), ring=None):
        if ring is None:
            raise ValueError("a coefficient ring is required")
        c = [ring.element(x) for x in coeffs]
        while c and ring.is_zero(c[-1]):
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "ring", ring)

    @classmethod
    def _raw(cls, coeffs, ring):
        c = list(coeffs)
        while c and ring.is_zero(c[-1]):
            c.pop()
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", tuple(c))
        object.__setattr__(p, "ring", ring)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("DensePoly is immutable")

    @classmethod
    def monomial(cls, n: int, ring, c=None):
        return cls._raw([ring.zero] * n + [ring.one if c is None else c], ring)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def prec(self) -> int:
        return len(self.coeffs)

    def lc(self):
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, DensePoly):
            return self.ring == other.ring and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __add__(self, other):
        r = self.ring
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = r.add(out[i], y)
        return DensePoly._raw(out, r)

    def __neg__(self):
        return DensePoly._raw([self.ring.neg(x) for x in self.coeffs], self.ring)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        r = self.ring
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return DensePoly._raw((), r)
        if hasattr(r, "convolve"):
            return DensePoly._raw(r.convolve(a, b), r)
        return DensePoly._raw(_conv(a, b, r.zero, r.add, r.mul), r)

    def scale(self, c, left: bool = False):
        """self * c (or c * self)."""
        m = self.ring.mul
        return DensePoly._raw([m(c, x) if left else m(x, c) for x in self.coeffs], self.ring)

    def low(self, e: int) -> "DensePoly":
        """self rem x**e."""
        return DensePoly._raw(self.coeffs[:max(e, 0)], self.ring)

    def coeff_str(self) -> str:
        return ",".join(str(x) for x in self.coeffs) or "0"

    def __str__(self):
        return f"{self.coeff_str()} @ {self.ring!r}"

    def __repr__(self):
        return f"DensePoly({self.coeff_str()!r} @ {self.ring!r})"


def parse_poly(text: str, field: PrimeField | None = None) -> DensePoly:
    """Parse ``"1,2,0,1 @ F5"``; the ``@ Fp`` part may be replaced by ``field``."""
    body, _, tag = text.partition("@")
    tag = tag.strip()
    if tag:
        if not tag.upper().startswith("F"):
            raise ValueError(f"unknown field {tag!r}")
        f = PrimeField(int(tag[1:]))
        if field is not None and f != field:
            raise ValueError(f"field mismatch: {tag} vs {field!r}")
        field = f
    if field is None:
        raise ValueError("no field given")
    body = body.strip()
    coeffs = [int(x) for x in body.split(",")] if body else []
    return DensePoly(coeffs, field)


def pshift(p: DensePoly, n: int) -> DensePoly:
    """p * x**n, dropping terms with negative exponent."""
    if n >= 0:
        return DensePoly._raw((p.ring.zero,) * n + p.coeffs if p else (), p.ring)
    return DensePoly._raw(p.coeffs[-n:], p.ring)


def pmult_mod(a: DensePoly, b: DensePoly, e: int) -> DensePoly:
    """(a*b) rem x**e from the e-term tails."""
    return (a.low(e) * b.low(e)).low(e)


def ppow_diff(v: DensePoly, w: DensePoly, h: int, ell: int | None = None,
              g: int = 0, window: int | None = None) -> DensePoly:
    """x**h - v*w.

    With ``ell`` (the number of correct leading terms of w) or an explicit
    ``window`` e the caller promises deg(x**h - v*w) <= e, so only the
    product terms below x**(e+1) are formed.
    """
    ring = v.ring
    if window is not None:
        e = window
    elif ell is None:
        e = h
    else:
        e = v.degree + max(w.degree, 0) - ell + g
    if e + 1 >= h or e < 0:
        r = pshift(DensePoly._raw((ring.one,), ring), h) - v * w
    else:
        r = -pmult_mod(v, w, e + 1)
        if _shadow["on"]:
            _shadow["counts"]["windowed"] += 1
    if _shadow["on"]:
        _shadow["counts"]["calls"] += 1
        full = pshift(DensePoly._raw((ring.one,), ring), h) - v * w
        if full != r:
            raise AssertionError(f"ppow_diff mismatch: {r} != {full}")
    return r


class PolyDomain:
    """Polynomials over a coefficient ring, for :mod:`exactquo.generic_core`."""

    shortfall = 0
    guard = 0
    place_offset = 1

    def __init__(self, ring):
        self.ring = ring

    def __repr__(self):
        return f"PolyDomain({self.ring!r})"

    def precision(self, e):
        return e.prec

    def shift(self, e, n):
        return pshift(e, n)

    def mul(self, a, b):
        return a * b

    def sub(self, a, b):
        return a - b

    def initial_value(self, v, h):
        # top two terms of x**(k+1) quo v
        r = self.ring
        c = r.inv(v.lc())
        nxt = v.coeffs[-2] if len(v.coeffs) > 1 else r.zero
        q0 = r.neg(r.mul(r.mul(c, nxt), c))
        return DensePoly._raw((q0, c), r), 2

    def small_case(self, v, h):
        r = self.ring
        if not v:
            raise ZeroDivisionError("shifted inverse of the zero polynomial")
        if h < 0:
            raise ValueError("negative shift exponent")
        k = v.degree
        if k > h:
            return DensePoly._raw((), r)
        if all(r.is_zero(x) for x in v.coeffs[:-1]):
            return DensePoly.monomial(h - k, r, r.inv(v.lc()))
        return None

    def pow_diff(self, v, w, h, ell, g, window=None):
        return ppow_diff(v, w, h, ell, g, window)

    def residual_times(self, w, r):
        return w * r

    def shift_residual(self, r, n):
        return pshift(r, n)

    def add_residual(self, x, r):
        return x + r

    def next_window(self, r, h, v):
        return max(2 * r.degree - h, v.degree - 1)

    def finish(self, w, v, h):
        return w

    def fix_quotient(self, u, v, q, side):
        return q


def pshinv(v: DensePoly, n: int, variant=RefineVariant.REFINE3,
           stats: IterationStats | None = None) -> DensePoly:
    """x**n quo v."""
    ring = v.ring
    if not v:
        raise ZeroDivisionError("shifted inverse of the zero polynomial")
    dom = PolyDomain(ring)
    if getattr(ring, "commutative", False):
        c = ring.inv(v.lc())
        return generic_shinv(dom, v.scale(c), n, variant, stats).scale(c)
    return generic_shinv(dom, v, n, variant, stats)


def pdivmod(u: DensePoly, v: DensePoly, variant=RefineVariant.REFINE3):
    """(q, r) with u = q*v + r and deg r < deg v."""
    if not v:
        raise ZeroDivisionError("polynomial division by zero")
    if u.degree < v.degree:
        return DensePoly._raw((), u.ring), u
    h = u.degree
    q = pshift(u * pshinv(v, h, variant), -h)
    return q, u - q * v
