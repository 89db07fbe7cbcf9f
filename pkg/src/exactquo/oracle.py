"""Slow, independent references for the tests.

Nothing here touches the shifted-inverse code: integer division is the
textbook digit-by-digit method, polynomial division is synthetic division,
and the second polynomial oracle inverts the reversed divisor as a power
series mod x**(h-k+1).  Every call checks its own multiply-back identity.
"""

from __future__ import annotations

from .bigdigits import Natural, add, cmp, mul_digit, mult, prec, shift, sub, zero
from .poly import DensePoly


class OracleError(AssertionError):
    pass


def school_divmod(u: Natural, v: Natural) -> tuple[Natural, Natural]:
    """Long division, one quotient digit at a time."""
    base = u.base
    if not v:
        raise ZeroDivisionError("division by zero")
    n = prec(v)
    vt = int(shift(v, -(n - 2))) if n >= 2 else int(v)
    qd = []
    r = zero(base)
    for d in reversed(u.digits):
        r = add(shift(r, 1), Natural([d], base))
        # estimate from the top digits, then repair
        if cmp(r, v) < 0:
            qd.append(0)
            continue
        rt = int(shift(r, -(n - 2))) if n >= 2 else int(r)
        q = min(rt // vt, base - 1)
        p = mul_digit(v, q)
        while cmp(p, r) > 0:
            q -= 1
            p = sub(p, v)
        r = sub(r, p)
        while cmp(r, v) >= 0:
            q += 1
            r = sub(r, v)
        qd.append(q)
    q = Natural(list(reversed(qd)), base)
    if cmp(add(mult(q, v), r), u) != 0 or cmp(r, v) >= 0:
        raise OracleError("school_divmod failed its multiply-back check")
    return q, r


def _check_poly(u, v, q, r):
    if q * v + r != u or (r and r.degree >= v.degree):
        raise OracleError("polynomial oracle failed its multiply-back check")


def poly_longdiv(u: DensePoly, v: DensePoly) -> tuple[DensePoly, DensePoly]:
    """Synthetic division over a field."""
    F = u.ring
    if not v:
        raise ZeroDivisionError("polynomial division by zero")
    n = len(v.coeffs)
    r = list(u.coeffs)
    q = [F.zero] * max(len(r) - n + 1, 0)
    ci = F.inv(v.lc())
    for i in range(len(q) - 1, -1, -1):
        c = F.mul(r[i + n - 1], ci)
        q[i] = c
        for j, y in enumerate(v.coeffs):
            r[i + j] = F.sub(r[i + j], F.mul(c, y))
    qp, rp = DensePoly(q, F), DensePoly(r, F)
    _check_poly(u, v, qp, rp)
    return qp, rp


def _mul_trunc(F, a, b, n):
    out = [F.zero] * n
    for i, x in enumerate(a[:n]):
        if x == F.zero:
            continue
        for j, y in enumerate(b[:n - i]):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return out


def _series_inverse(F, f, n):
    # g with f*g = 1 mod x**n, precision doubling
    g = [F.inv(f[0])]
    m = 1
    while m < n:
        m = min(2 * m, n)
        fg = _mul_trunc(F, f, g, m)
        e = [F.neg(x) for x in fg]
        e[0] = F.add(e[0], F.add(F.one, F.one))
        g = _mul_trunc(F, g, e, m)
    return g[:n]


def reverse_newton_divmod(u: DensePoly, v: DensePoly) -> tuple[DensePoly, DensePoly]:
    """Quotient through the reversed divisor's power-series inverse."""
    F = u.ring
    if not v:
        raise ZeroDivisionError("polynomial division by zero")
    h, k = u.degree, v.degree
    if h < k:
        q = DensePoly([], F)
        _check_poly(u, v, q, u)
        return q, u
    m = h - k + 1
    rev_v = list(reversed(v.coeffs))
    rev_u = list(reversed(u.coeffs))
    rq = _mul_trunc(F, rev_u, _series_inverse(F, rev_v, m), m)
    q = DensePoly(list(reversed(rq)), F)
    r = u - q * v
    _check_poly(u, v, q, r)
    return q, r
