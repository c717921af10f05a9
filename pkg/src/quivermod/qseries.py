"""Exact polynomials and rational functions in one variable ``q``.

Everything here works over the integers with Python's arbitrary precision
ints. Two pieces carry the weight of the whole engine:

* multiplication and exact division of large polynomials go through
  Kronecker substitution (pack the coefficients into one big integer, let
  CPython's bignum arithmetic do the work, unpack again);
* gcds use the heuristic integer-evaluation method first and fall back to a
  primitive Euclidean remainder sequence, so results are always exact.

:class:`RationalFunctionQ` keeps values in lowest terms with a positive
leading denominator coefficient, which makes ``==`` a structural comparison.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd as igcd
from typing import Iterable, Union

from .errors import NonPolynomial

__all__ = [
    "PolyQ",
    "RationalFunctionQ",
    "ratfun_arith",
    "ratfun_to_poly",
    "poly_eval",
    "poly_gcd",
    "q_integer",
    "q_factorial",
    "q_binomial",
    "interpolate",
]

# below this length schoolbook multiplication beats packing overhead
_KRONECKER_CUTOFF = 12


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _maxabs(coeffs) -> int:
    return max(map(abs, coeffs)) if coeffs else 0


def _pack(coeffs, width: int) -> int:
    """Evaluate at 2**(8*width); every |c| must fit in ``width`` bytes."""
    zero = bytes(width)
    pos = b"".join(c.to_bytes(width, "little") if c > 0 else zero for c in coeffs)
    neg = b"".join((-c).to_bytes(width, "little") if c < 0 else zero for c in coeffs)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _unpack(value: int, n: int, width: int) -> tuple:
    """Inverse of :func:`_pack` for balanced digits, |c| < 2**(8*width-1)."""
    half = 1 << (8 * width - 1)
    offset = int.from_bytes((bytes(width - 1) + b"\x80") * n, "little")
    raw = (value + offset).to_bytes(width * n, "little")
    return tuple(
        int.from_bytes(raw[i * width:(i + 1) * width], "little") - half
        for i in range(n)
    )


def _width(bound: int) -> int:
    # bytes needed so that |c| <= bound is a balanced digit
    return (bound.bit_length() + 1) // 8 + 1


def _mul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    if min(len(a), len(b)) < _KRONECKER_CUTOFF:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return _trim(out)
    w = _width(_maxabs(a) * _maxabs(b) * min(len(a), len(b)))
    prod = _pack(a, w) * _pack(b, w)
    return _trim(_unpack(prod, len(a) + len(b) - 1, w))


def _exquo(f: tuple, g: tuple):
    """Return f/g if g divides f in Z[q], else None."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if not f:
        return ()
    if len(g) == 1:
        c = g[0]
        if any(x % c for x in f):
            return None
        return tuple(x // c for x in f)
    if len(f) < len(g) or f[-1] % g[-1] or (g[0] and f[0] % g[0]):
        return None
    if g[0] == 0:
        k = next(i for i, c in enumerate(g) if c)
        if any(f[:k]):
            return None
        return _exquo(f[k:], g[k:])
    dq = len(f) - len(g)
    # any factor of f has coefficients below 2**deg * ||f||_2
    bound = max(_maxabs(f) << (dq + len(f).bit_length()), _maxabs(g))
    w = _width(bound)
    num, den = _pack(f, w), _pack(g, w)
    quo, rem = divmod(num, den)
    if rem:
        return None
    try:
        q = _trim(_unpack(quo, dq + 1, w))
    except OverflowError:
        return None
    if _mul(q, g) != f:
        return None
    return q


def _content(f: tuple) -> int:
    c = reduce(igcd, f, 0)
    if f and f[-1] < 0:
        c = -c
    return c


def _primitive(f: tuple) -> tuple:
    c = _content(f)
    if c in (0, 1):
        return f
    return tuple(x // c for x in f)


def _prem(f: tuple, g: tuple) -> tuple:
    """Pseudo-remainder of f by g."""
    f = list(f)
    dg = len(g) - 1
    lc = g[-1]
    while len(f) - 1 >= dg and f:
        lead = f[-1]
        shift = len(f) - 1 - dg
        f = [lc * x for x in f]
        for i, y in enumerate(g):
            f[shift + i] -= lead * y
        while f and f[-1] == 0:
            f.pop()
    return tuple(f)


def _gcd_euclid(f: tuple, g: tuple) -> tuple:
    # f, g primitive
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _prem(f, g)
        f, g = g, _primitive(r)
    return _primitive(f)


def _gcd_heuristic(f: tuple, g: tuple):
    # f, g primitive and nonconstant
    w = _width(2 * max(_maxabs(f), _maxabs(g)) + 2)
    for _ in range(4):
        gamma = igcd(_pack(f, w), _pack(g, w))
        n = gamma.bit_length() // (8 * w) + 2
        try:
            h = _primitive(_trim(_unpack(gamma, n, w)))
        except OverflowError:
            h = ()
        if h:
            cf = _exquo(f, h)
            if cf is not None:
                cg = _exquo(g, h)
                if cg is not None:
                    return h
        w += 3
    return None


def _gcd(f: tuple, g: tuple) -> tuple:
    if not f:
        return _negate(g) if g and g[-1] < 0 else g
    if not g:
        return _negate(f) if f[-1] < 0 else f
    c = igcd(_content(f), _content(g))
    f, g = _primitive(f), _primitive(g)
    if len(f) == 1 or len(g) == 1:
        return (c,)
    if f == g:
        h = f
    else:
        h = _gcd_heuristic(f, g)
        if h is None:
            h = _gcd_euclid(f, g)
    return tuple(c * x for x in h)


class PolyQ:
    """Integer polynomial in ``q``; ``coeffs[k]`` is the coefficient of q**k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("PolyQ is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple) -> "PolyQ":
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "PolyQ":
        if k < 0:
            raise ValueError("negative exponent")
        return cls._raw((0,) * k + (c,) if c else ())

    @classmethod
    def constant(cls, c: int) -> "PolyQ":
        return cls._raw((c,) if c else ())

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = PolyQ.constant(other)
        if not isinstance(other, PolyQ):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("PolyQ", self.coeffs))

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyQ._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self):
        return PolyQ._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return PolyQ._raw(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out, base = PolyQ.constant(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def exact_div(self, other: "PolyQ") -> "PolyQ":
        """Quotient in Z[q]; raises NonPolynomial if ``other`` does not divide."""
        other = _as_poly(other)
        q = _exquo(self.coeffs, other.coeffs)
        if q is None:
            raise NonPolynomial(f"{other} does not divide {self}")
        return PolyQ._raw(q)

    def divides(self, other: "PolyQ") -> bool:
        return _exquo(_as_poly(other).coeffs, self.coeffs) is not None

    def shift(self, k: int) -> "PolyQ":
        """Multiply by q**k (k >= 0)."""
        if not self.coeffs or k == 0:
            return self
        return PolyQ._raw((0,) * k + self.coeffs)

    def __call__(self, x):
        return poly_eval(self, x)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __repr__(self):
        return f"PolyQ({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs, "q")


def format_poly(coeffs, var: str = "q", step: int = 1) -> str:
    """Render low-degree-first, e.g. ``1 + q + 2*q^2``; ``step`` scales exponents."""
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        e = k * step
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


def _as_poly(x):
    if isinstance(x, PolyQ):
        return x
    if isinstance(x, int):
        return PolyQ.constant(x)
    return None


def poly_gcd(f: PolyQ, g: PolyQ) -> PolyQ:
    """Gcd in Z[q], normalised to a positive leading coefficient."""
    return PolyQ._raw(_gcd(f.coeffs, g.coeffs))


def poly_eval(p: PolyQ, x):
    """Exact Horner evaluation at an int or Fraction."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


class RationalFunctionQ:
    """Reduced ratio ``num/den`` of integer polynomials in ``q``.

    Invariants: den != 0, gcd(num, den) = 1 in Z[q], leading coefficient of
    den positive. Zero is ``0/1``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num, den = _as_poly(num), _as_poly(den)
        if num is None or den is None:
            raise TypeError("numerator and denominator must be PolyQ or int")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        n, d = _reduce(num.coeffs, den.coeffs)
        object.__setattr__(self, "num", PolyQ._raw(n))
        object.__setattr__(self, "den", PolyQ._raw(d))

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunctionQ is immutable")

    @classmethod
    def _raw(cls, num: tuple, den: tuple) -> "RationalFunctionQ":
        r = object.__new__(cls)
        object.__setattr__(r, "num", PolyQ._raw(num))
        object.__setattr__(r, "den", PolyQ._raw(den))
        return r

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "RationalFunctionQ":
        """c * q**k for any integer k."""
        if c == 0:
            return cls._raw((), (1,))
        if k >= 0:
            return cls._raw((0,) * k + (c,), (1,))
        return cls._raw((c,), (0,) * (-k) + (1,))

    @classmethod
    def from_poly(cls, p: PolyQ) -> "RationalFunctionQ":
        return cls._raw(p.coeffs, (1,))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.coeffs == (1,)

    def __eq__(self, other):
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs

    def __hash__(self):
        return hash(("RationalFunctionQ", self.num.coeffs, self.den.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __neg__(self):
        return RationalFunctionQ._raw(tuple(-c for c in self.num.coeffs), self.den.coeffs)

    def __add__(self, other):
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        a, b = self.num.coeffs, self.den.coeffs
        c, d = other.num.coeffs, other.den.coeffs
        if not a:
            return other
        if not c:
            return self
        if b == d:
            n, dd = _reduce(_add(a, c), b)
            return RationalFunctionQ._raw(n, dd)
        g = _gcd(b, d)
        if g == (1,):
            return RationalFunctionQ._raw(_add(_mul(a, d), _mul(c, b)), _mul(b, d))
        b1, d1 = _exquo(b, g), _exquo(d, g)
        num = _add(_mul(a, d1), _mul(c, b1))
        if not num:
            return RationalFunctionQ._raw((), (1,))
        g2 = _gcd(num, g)
        if g2 != (1,):
            num = _exquo(num, g2)
            g = _exquo(g, g2)
        den = _mul(_mul(b1, d1), g)
        if den[-1] < 0:
            num, den = _negate(num), _negate(den)
        return RationalFunctionQ._raw(num, den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        a, b = self.num.coeffs, self.den.coeffs
        c, d = other.num.coeffs, other.den.coeffs
        if not a or not c:
            return RationalFunctionQ._raw((), (1,))
        g1, g2 = _gcd(a, d), _gcd(c, b)
        if g1 != (1,):
            a, d = _exquo(a, g1), _exquo(d, g1)
        if g2 != (1,):
            c, b = _exquo(c, g2), _exquo(b, g2)
        num, den = _mul(a, c), _mul(b, d)
        if den[-1] < 0:
            num, den = _negate(num), _negate(den)
        return RationalFunctionQ._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunctionQ":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        num, den = self.den.coeffs, self.num.coeffs
        if den[-1] < 0:
            num, den = _negate(num), _negate(den)
        return RationalFunctionQ._raw(num, den)

    def __truediv__(self, other):
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunctionQ._raw((self.num ** n).coeffs, (self.den ** n).coeffs)

    def __call__(self, x):
        """Exact value at a rational point; ZeroDivisionError at a pole."""
        return Fraction(poly_eval(self.num, x)) / poly_eval(self.den, x)

    def __repr__(self):
        return f"RationalFunctionQ({list(self.num.coeffs)}, {list(self.den.coeffs)})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"


def _add(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _negate(a: tuple) -> tuple:
    return tuple(-c for c in a)


def _reduce(num: tuple, den: tuple):
    if not num:
        return (), (1,)
    g = _gcd(num, den)
    if g != (1,):
        num, den = _exquo(num, g), _exquo(den, g)
    if den[-1] < 0:
        num, den = _negate(num), _negate(den)
    return num, den


def _as_ratfun(x):
    if isinstance(x, RationalFunctionQ):
        return x
    if isinstance(x, PolyQ):
        return RationalFunctionQ.from_poly(x)
    if isinstance(x, int):
        return RationalFunctionQ._raw((x,) if x else (), (1,))
    return None


Number = Union[int, PolyQ, RationalFunctionQ]


def ratfun_arith(a: Number, b: Number, op: str) -> RationalFunctionQ:
    """Apply one of ``add``, ``sub``, ``mul``, ``div``."""
    a, b = _as_ratfun(a), _as_ratfun(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def ratfun_to_poly(r: RationalFunctionQ) -> PolyQ:
    """The polynomial equal to ``r``; NonPolynomial if there is none.

    Over Q[q] a reduced fraction is a polynomial only if its denominator is a
    constant; the constant must then divide every numerator coefficient.
    """
    r = _as_ratfun(r)
    den = r.den.coeffs
    if len(den) != 1:
        raise NonPolynomial(f"{r} is not a polynomial")
    c = den[0]
    if c != 1:
        raise NonPolynomial(f"{r} has non-integral coefficients")
    return r.num


@lru_cache(maxsize=None)
def q_integer(n: int) -> PolyQ:
    """[n] = 1 + q + ... + q**(n-1); [0] = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return PolyQ._raw((1,) * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> PolyQ:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return PolyQ.constant(1)
    return q_factorial(n - 1) * q_integer(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> PolyQ:
    """Gaussian binomial [n]! / ([k]! [n-k]!); zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return PolyQ()
    k = min(k, n - k)
    num = reduce(lambda p, i: p * q_integer(i), range(n - k + 1, n + 1), PolyQ.constant(1))
    return num.exact_div(q_factorial(k))


def interpolate(points) -> PolyQ:
    """Unique polynomial of degree < len(points) through integer-valued points.

    ``points`` is a sequence of (x, y) with distinct rational x. Raises
    NonPolynomial if the interpolant has non-integral coefficients.
    """
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    n = len(xs)
    # Newton divided differences
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    basis = [Fraction(1)]
    for j in range(n):
        for i, b in enumerate(basis):
            poly[i] += coef[j] * b
        # basis *= (q - x_j)
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i + 1] += b
            nxt[i] -= xs[j] * b
        basis = nxt
    if any(c.denominator != 1 for c in poly):
        raise NonPolynomial("interpolant has non-integral coefficients")
    return PolyQ(int(c) for c in poly)
