"""Base-B multiprecision naturals stored as little-endian digit tuples.

A :class:`Natural` is an immutable value ``sum(d[i] * B**i)``.  Zero is the
empty tuple and the most significant digit is never zero.  The base is a
property of the value; mixing bases is an error.

Supported bases are every ``2 <= B <= 2**16`` plus the word base ``2**32``.
Small bases exist so that worked examples can be run in base 10; the word
base is what the benchmarks use.

Multiplication goes through a :class:`MultBackend`.  Tiny operands use a
pure Python schoolbook loop; larger ones are converted to 16-bit (or
smaller) limbs and multiplied in numpy, either by direct convolution
(schoolbook) or by Karatsuba splitting with carries deferred to the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

WORD_BASE = 1 << 32
DEFAULT_BASE = WORD_BASE
MAX_SMALL_BASE = 1 << 16

# products below this many digit pairs skip the numpy round trip
_PY_MUL_CUTOFF = 400
DEFAULT_KARATSUBA_THRESHOLD = 128


def check_base(base: int) -> int:
    if not isinstance(base, int) or isinstance(base, bool):
        raise TypeError(f"base must be an int, got {type(base).__name__}")
    if not (2 <= base <= MAX_SMALL_BASE or base == WORD_BASE):
        raise ValueError(f"unsupported base {base}: need 2 <= B <= 2**16 or B == 2**32")
    return base


def _strip(digits: list) -> tuple:
    n = len(digits)
    while n and digits[n - 1] == 0:
        n -= 1
    return tuple(digits[:n])


def _int_to_digits(value: int, base: int) -> tuple:
    if not value:
        return ()
    if base == WORD_BASE:
        nbytes = (value.bit_length() + 31) // 32 * 4
        words = np.frombuffer(value.to_bytes(nbytes, "little"), dtype="<u4")
        return _strip(words.tolist())
    ds = []
    if base & (base - 1) == 0:
        bits = base.bit_length() - 1
        mask = base - 1
        while value:
            ds.append(value & mask)
            value >>= bits
        return tuple(ds)
    while value:
        value, d = divmod(value, base)
        ds.append(d)
    return tuple(ds)


def _digits_to_int(digits: tuple, base: int) -> int:
    if not digits:
        return 0
    if base == WORD_BASE:
        return int.from_bytes(np.array(digits, dtype="<u4").tobytes(), "little")
    value = 0
    for d in reversed(digits):
        value = value * base + d
    return value


class Natural:
    """Nonnegative integer as a little-endian tuple of base-B digits."""

    __slots__ = ("digits", "base")

    def __init__(self, digits: Iterable[int] = (), base: int = DEFAULT_BASE):
        check_base(base)
        ds = [int(d) for d in digits]
        for d in ds:
            if not 0 <= d < base:
                raise ValueError(f"digit {d} out of range for base {base}")
        object.__setattr__(self, "digits", _strip(ds))
        object.__setattr__(self, "base", base)

    @classmethod
    def _raw(cls, digits: tuple, base: int) -> "Natural":
        # trusted constructor: digits already valid and stripped
        self = object.__new__(cls)
        object.__setattr__(self, "digits", digits)
        object.__setattr__(self, "base", base)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Natural is immutable")

    # -- conversions -------------------------------------------------------

    @classmethod
    def from_int(cls, value: int, base: int = DEFAULT_BASE) -> "Natural":
        check_base(base)
        value = int(value)
        if value < 0:
            raise ValueError("Natural cannot hold a negative value")
        if value == 0:
            return cls._raw((), base)
        return cls._raw(_int_to_digits(value, base), base)

    def __int__(self) -> int:
        return _digits_to_int(self.digits, self.base)

    __index__ = __int__

    @classmethod
    def from_str(cls, text: str, base: int = DEFAULT_BASE) -> "Natural":
        """Parse decimal, or hexadecimal with a ``0x`` prefix."""
        s = text.strip().replace("_", "")
        if s.lower().startswith("0x"):
            value = int(s[2:], 16)
        else:
            value = int(s, 10)
        return cls.from_int(value, base)

    def to_str(self, radix: int = 10) -> str:
        if radix == 10:
            return str(int(self))
        if radix == 16:
            return hex(int(self))
        raise ValueError("radix must be 10 or 16")

    # -- protocol ----------------------------------------------------------

    def __repr__(self):
        if self.base == 10:
            return f"Natural({int(self)}, base=10)"
        return f"Natural.from_int({int(self)}, base={self.base})"

    def __str__(self):
        return self.to_str()

    def __bool__(self):
        return bool(self.digits)

    def __len__(self):
        return len(self.digits)

    def __hash__(self):
        return hash((self.digits, self.base))

    def __eq__(self, other):
        if isinstance(other, Natural):
            return self.base == other.base and self.digits == other.digits
        if isinstance(other, int):
            return other >= 0 and int(self) == other
        return NotImplemented

    def __lt__(self, other):
        return cmp(self, _coerce(other, self.base)) < 0

    def __le__(self, other):
        return cmp(self, _coerce(other, self.base)) <= 0

    def __gt__(self, other):
        return cmp(self, _coerce(other, self.base)) > 0

    def __ge__(self, other):
        return cmp(self, _coerce(other, self.base)) >= 0

    def __add__(self, other):
        return add(self, _coerce(other, self.base))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _coerce(other, self.base))

    def __mul__(self, other):
        return mult(self, _coerce(other, self.base))

    __rmul__ = __mul__

    def __lshift__(self, n: int):
        return shift(self, n)

    def __rshift__(self, n: int):
        return shift(self, -n)

    @property
    def prec(self) -> int:
        return len(self.digits)


def _coerce(x, base: int) -> Natural:
    if isinstance(x, Natural):
        return x
    if isinstance(x, int):
        return Natural.from_int(x, base)
    raise TypeError(f"cannot combine Natural with {type(x).__name__}")


def _same_base(u: Natural, v: Natural) -> int:
    if u.base != v.base:
        raise ValueError(f"base mismatch: {u.base} vs {v.base}")
    return u.base


def zero(base: int = DEFAULT_BASE) -> Natural:
    return Natural._raw((), check_base(base))


def one(base: int = DEFAULT_BASE) -> Natural:
    return Natural._raw((1,), check_base(base))


def power(base: int, n: int) -> Natural:
    """B**n as a Natural (n >= 0)."""
    if n < 0:
        raise ValueError("negative exponent")
    return Natural._raw((0,) * n + (1,), check_base(base))


def prec(u: Natural) -> int:
    """Number of base-B digits; 0 for zero."""
    return len(u.digits)


def shift(u: Natural, n: int) -> Natural:
    """Whole shift: floor(u * B**n)."""
    if n == 0 or not u.digits:
        return u
    if n > 0:
        return Natural._raw((0,) * n + u.digits, u.base)
    if -n >= len(u.digits):
        return Natural._raw((), u.base)
    return Natural._raw(u.digits[-n:], u.base)


def low_digits(u: Natural, e: int) -> Natural:
    """u rem B**e."""
    if e <= 0:
        return Natural._raw((), u.base)
    if e >= len(u.digits):
        return u
    return Natural._raw(_strip(list(u.digits[:e])), u.base)


def is_power_of_base(u: Natural) -> bool:
    ds = u.digits
    return bool(ds) and ds[-1] == 1 and not any(ds[:-1])


def cmp(u: Natural, v: Natural) -> int:
    """-1, 0 or 1 as u <, ==, > v."""
    _same_base(u, v)
    a, b = u.digits, v.digits
    if len(a) != len(b):
        return -1 if len(a) < len(b) else 1
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return -1 if x < y else 1
    return 0


def add(u: Natural, v: Natural) -> Natural:
    base = _same_base(u, v)
    a, b = u.digits, v.digits
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return Natural._raw(a, base)
    out = []
    carry = 0
    for i, y in enumerate(b):
        t = a[i] + y + carry
        if t >= base:
            out.append(t - base)
            carry = 1
        else:
            out.append(t)
            carry = 0
    i = len(b)
    n = len(a)
    while carry and i < n:
        t = a[i] + 1
        if t == base:
            out.append(0)
        else:
            out.append(t)
            carry = 0
        i += 1
    out.extend(a[i:])
    if carry:
        out.append(1)
    return Natural._raw(tuple(out), base)


def sub(u: Natural, v: Natural) -> Natural:
    """u - v; raises ValueError if v > u."""
    base = _same_base(u, v)
    a, b = u.digits, v.digits
    if len(b) > len(a):
        raise ValueError("subtraction underflow")
    out = []
    borrow = 0
    for i, y in enumerate(b):
        t = a[i] - y - borrow
        if t < 0:
            out.append(t + base)
            borrow = 1
        else:
            out.append(t)
            borrow = 0
    i = len(b)
    n = len(a)
    while borrow and i < n:
        t = a[i] - 1
        if t < 0:
            out.append(base - 1)
        else:
            out.append(t)
            borrow = 0
        i += 1
    if borrow:
        raise ValueError("subtraction underflow")
    out.extend(a[i:])
    return Natural._raw(_strip(out), base)


def divmod_digit(u: Natural, d: int) -> tuple[Natural, int]:
    """Short division by a single digit 0 < d < B."""
    base = u.base
    if not 0 < d < base:
        raise ValueError("divisor must be a nonzero single digit")
    q = [0] * len(u.digits)
    r = 0
    for i in range(len(u.digits) - 1, -1, -1):
        r = r * base + u.digits[i]
        q[i], r = divmod(r, d)
    return Natural._raw(_strip(q), base), r


def mul_digit(u: Natural, d: int) -> Natural:
    """u * d for a single digit 0 <= d < B."""
    base = u.base
    if d == 0 or not u.digits:
        return Natural._raw((), base)
    out = []
    carry = 0
    for x in u.digits:
        carry, r = divmod(x * d + carry, base)
        out.append(r)
    while carry:
        carry, r = divmod(carry, base)
        out.append(r)
    return Natural._raw(tuple(out), base)


# ---------------------------------------------------------------------------
# multiplication

@dataclass(frozen=True)
class MultBackend:
    """Multiplication strategy.

    ``strategy`` is ``"schoolbook"`` or ``"karatsuba"``.  Karatsuba falls back
    to schoolbook once the shorter operand has fewer than
    ``karatsuba_threshold`` digits.  The leaves are vectorized convolutions,
    so the crossover sits well above the usual few dozen digits.
    """

    strategy: str = "karatsuba"
    karatsuba_threshold: int = DEFAULT_KARATSUBA_THRESHOLD

    def __post_init__(self):
        if self.strategy not in ("schoolbook", "karatsuba"):
            raise ValueError(f"unknown multiplication strategy {self.strategy!r}")
        if self.karatsuba_threshold < 2:
            raise ValueError("karatsuba_threshold must be at least 2")

    def multiply(self, a: tuple, b: tuple, base: int) -> tuple:
        """Product of two digit tuples, as a stripped digit tuple."""
        if not a or not b:
            return ()
        if len(a) * len(b) <= _PY_MUL_CUTOFF:
            return _py_mul(a, b, base)
        la, lbase, per = _to_limbs(a, base)
        lb, _, _ = _to_limbs(b, base)
        if self.strategy == "karatsuba":
            coeffs = _karatsuba(la, lb, self.karatsuba_threshold * per)
        else:
            coeffs = _conv(la, lb)
        limbs = _carry(coeffs, lbase)
        return _from_limbs(limbs, base, per)


SCHOOLBOOK = MultBackend("schoolbook")
KARATSUBA = MultBackend("karatsuba")
DEFAULT_BACKEND = KARATSUBA


def mult(u: Natural, v: Natural, backend: MultBackend | None = None) -> Natural:
    base = _same_base(u, v)
    backend = backend or DEFAULT_BACKEND
    return Natural._raw(backend.multiply(u.digits, v.digits, base), base)


def mult_mod(u: Natural, v: Natural, e: int, backend: MultBackend | None = None) -> Natural:
    """(u * v) rem B**e, computed from the e-digit tails of u and v."""
    if e < 0:
        raise ValueError("e must be nonnegative")
    base = _same_base(u, v)
    if e == 0:
        return Natural._raw((), base)
    backend = backend or DEFAULT_BACKEND
    a = _strip(list(u.digits[:e]))
    b = _strip(list(v.digits[:e]))
    prod = backend.multiply(a, b, base)
    return Natural._raw(_strip(list(prod[:e])), base)


def _py_mul(a: tuple, b: tuple, base: int) -> tuple:
    # small products: the interpreter's exact integer product is the leaf
    return _int_to_digits(_digits_to_int(a, base) * _digits_to_int(b, base), base)


def _to_limbs(digits: tuple, base: int):
    arr = np.array(digits, dtype=np.int64)
    if base == WORD_BASE:
        limbs = np.empty(2 * len(arr), dtype=np.int64)
        limbs[0::2] = arr & 0xFFFF
        limbs[1::2] = arr >> 16
        return limbs, 1 << 16, 2
    return arr, base, 1


def _from_limbs(limbs: np.ndarray, base: int, per: int) -> tuple:
    if per == 2:
        if len(limbs) % 2:
            limbs = np.append(limbs, 0)
        limbs = limbs[0::2] + (limbs[1::2] << 16)
    return _strip(limbs.tolist())


def _conv(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact convolution of nonnegative coefficient vectors."""
    if a.dtype == object or b.dtype == object:
        return np.convolve(a.astype(object), b.astype(object))
    bound = min(len(a), len(b)) * int(a.max()) * int(b.max())
    if bound < 1 << 53:
        # float dot products are exact here and run through BLAS
        return np.convolve(a.astype(np.float64), b.astype(np.float64)).astype(np.int64)
    if bound < 1 << 63:
        return np.convolve(a, b)
    return np.convolve(a.astype(object), b.astype(object))


def _padd(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    if len(x) < len(y):
        x, y = y, x
    out = x.copy()
    out[: len(y)] += y
    return out


def _karatsuba(a: np.ndarray, b: np.ndarray, threshold: int) -> np.ndarray:
    """Coefficient vector of a*b; carries are left to the caller."""
    if len(a) < len(b):
        a, b = b, a
    na, nb = len(a), len(b)
    if nb < threshold:
        return _conv(a, b)
    if na >= 2 * nb:
        out = None
        for i in range(0, na, nb):
            piece = _karatsuba(a[i:i + nb], b, threshold)
            if out is None:
                out = np.zeros(na + nb - 1, dtype=piece.dtype)
            elif piece.dtype == object and out.dtype != object:
                out = out.astype(object)
            out[i:i + len(piece)] += piece
        return out
    m = na // 2
    a0, a1 = a[:m], a[m:]
    b0, b1 = b[:m], b[m:]
    z0 = _karatsuba(a0, b0, threshold)
    z2 = _karatsuba(a1, b1, threshold)
    z1 = _karatsuba(_padd(a0, a1), _padd(b0, b1), threshold)
    dtype = object if object in (z0.dtype, z1.dtype, z2.dtype) else np.int64
    out = np.zeros(na + nb - 1, dtype=dtype)
    out[: len(z0)] += z0
    out[2 * m: 2 * m + len(z2)] += z2
    mid = z1.astype(dtype)
    mid[: len(z0)] -= z0
    mid[: len(z2)] -= z2
    # the middle term has at most na + nb - 1 - m meaningful coefficients
    top = len(out) - m
    if len(mid) > top:
        assert not mid[top:].any()
        mid = mid[:top]
    out[m: m + len(mid)] += mid
    return out


def _carry(c: np.ndarray, lbase: int) -> np.ndarray:
    """Propagate carries in a nonnegative coefficient vector (base ``lbase``)."""
    if c.dtype == object:
        out = []
        carry = 0
        for x in c.tolist():
            carry, r = divmod(int(x) + carry, lbase)
            out.append(r)
        while carry:
            carry, r = divmod(carry, lbase)
            out.append(r)
        return np.array(out, dtype=np.int64)
    c = np.append(c.astype(np.int64), np.zeros(2, dtype=np.int64))
    while True:
        hi, lo = np.divmod(c, lbase)
        if not hi.any():
            return lo
        if hi.max() <= 1:
            break
        c = lo
        c[1:] += hi[:-1]
    s = lo
    s[1:] += hi[:-1]
    # s is now in [0, lbase]; resolve the remaining 0/1 carries with a
    # lookahead so long runs of lbase-1 digits cost O(n), not O(n) passes
    n = len(s)
    idx = np.arange(n)
    generate = s == lbase
    breaker = np.where(s != lbase - 1, idx, -1)
    last = np.maximum.accumulate(breaker)
    carry_in = np.zeros(n, dtype=bool)
    lb = last[:-1]
    carry_in[1:] = (lb >= 0) & generate[np.maximum(lb, 0)]
    return (s + carry_in) % lbase


# ---------------------------------------------------------------------------
# signed values

@dataclass(frozen=True)
class Signed:
    """Sign-magnitude integer used for residuals like B**h - v*w."""

    neg: bool
    mag: Natural

    def __post_init__(self):
        if self.neg and not self.mag:
            object.__setattr__(self, "neg", False)

    @classmethod
    def diff(cls, a: Natural, b: Natural) -> "Signed":
        """a - b with sign."""
        if cmp(a, b) >= 0:
            return cls(False, sub(a, b))
        return cls(True, sub(b, a))

    def __int__(self):
        return -int(self.mag) if self.neg else int(self.mag)

    def __bool__(self):
        return bool(self.mag)

    @property
    def base(self):
        return self.mag.base

    def times(self, w: Natural, backend: MultBackend | None = None) -> "Signed":
        return Signed(self.neg, mult(w, self.mag, backend))

    def floor_shift(self, n: int) -> "Signed":
        """floor(self * B**n), rounding toward minus infinity."""
        if n >= 0 or not self.neg:
            return Signed(self.neg, shift(self.mag, n))
        q = shift(self.mag, n)
        if any(self.mag.digits[:-n]):
            q = add(q, one(self.mag.base))
        return Signed(True, q)

    def add_to(self, u: Natural) -> Natural:
        """u + self; raises ValueError if the result is negative."""
        if self.neg:
            return sub(u, self.mag)
        return add(u, self.mag)
