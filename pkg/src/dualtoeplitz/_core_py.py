"""Pure-Python arithmetic kernel.

Reference implementation of the hot kernels: exact Gaussian-rational scalars
and the bulk operations on monomial term maps (products, inner products,
projection onto the complement of the harmonic functions).  The compiled
module `_core` is a line-for-line Cython twin; this one will be slower but is
always available and is what the compiled version is checked against.

A scalar is stored as a normalized integer triple (a, b, d) meaning
(a + b*i)/d with d > 0 and gcd(a, b, d) = 1.  A term map is a dict mapping
exponent pairs (n, m), i.e. the monomial z^n * conj(z)^m, to nonzero scalars.

The inner product on the unit disk with normalized area measure is

    <z^n conj(z)^m, z^k conj(z)^l> = 2/(n+m+k+l+2)  if n - m == k - l, else 0.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

BACKEND = "python"


class GaussianRational:
    """Complex number with rational real and imaginary parts, in lowest terms."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        try:
            pa, qa = re.numerator, re.denominator
            pb, qb = im.numerator, im.denominator
        except AttributeError:
            raise TypeError("parts must be int or Fraction, got %r, %r" % (re, im))
        d = qa * qb // gcd(qa, qb)
        a = pa * (d // qa)
        b = pb * (d // qb)
        g = gcd(a, b, d)
        if g > 1:
            a //= g
            b //= g
            d //= g
        self._a = a
        self._b = b
        self._d = d

    # internal: build from an already-normalized triple
    @classmethod
    def _raw(cls, a, b, d):
        self = object.__new__(cls)
        self._a = a
        self._b = b
        self._d = d
        return self

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    @property
    def num_re(self) -> int:
        return self._a

    @property
    def num_im(self) -> int:
        return self._b

    @property
    def den(self) -> int:
        return self._d

    @property
    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    @property
    def is_real(self) -> bool:
        return self._b == 0

    def real_sign(self) -> int:
        """Sign of the real part: -1, 0 or 1 (denominator is positive)."""
        a = self._a
        return (a > 0) - (a < 0)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self._a, -self._b, self._d)

    def inverse(self) -> "GaussianRational":
        a, b, d = self._a, self._b, self._d
        if a == 0 and b == 0:
            raise ZeroDivisionError("inverse of zero")
        return _norm(d * a, -d * b, a * a + b * b)

    def abs2(self) -> Fraction:
        """Squared modulus |a/d + (b/d)i|^2 as an exact Fraction."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def _mul_int_ratio(self, p: int, q: int) -> "GaussianRational":
        # multiply by the rational p/q, q > 0
        return _norm(self._a * p, self._b * p, self._d * q)

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __pos__(self):
        return self

    def __neg__(self):
        return GaussianRational._raw(-self._a, -self._b, self._d)

    def __add__(self, other):
        if type(other) is GaussianRational:
            d1 = self._d
            d2 = other._d
            return _norm(
                self._a * d2 + other._a * d1,
                self._b * d2 + other._b * d1,
                d1 * d2,
            )
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.__add__(other)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is GaussianRational:
            d1 = self._d
            d2 = other._d
            return _norm(
                self._a * d2 - other._a * d1,
                self._b * d2 - other._b * d1,
                d1 * d2,
            )
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.__sub__(other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other.__sub__(self)

    def __mul__(self, other):
        if type(other) is GaussianRational:
            a1, b1 = self._a, self._b
            a2, b2 = other._a, other._b
            return _norm(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, self._d * other._d)
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.__mul__(other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if type(other) is not GaussianRational:
            other = _coerce(other)
            if other is None:
                return NotImplemented
        a2, b2 = other._a, other._b
        if a2 == 0 and b2 == 0:
            raise ZeroDivisionError("division by zero")
        a1, b1 = self._a, self._b
        d2 = other._d
        return _norm(
            d2 * (a1 * a2 + b1 * b2),
            d2 * (b1 * a2 - a1 * b2),
            self._d * (a2 * a2 + b2 * b2),
        )

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other.__truediv__(self)

    def __eq__(self, other):
        if type(other) is GaussianRational:
            return (
                self._a == other._a
                and self._b == other._b
                and self._d == other._d
            )
        coerced = _coerce(other)
        if coerced is None:
            return NotImplemented
        return self.__eq__(coerced)

    def __hash__(self):
        # agree with the numeric tower when the value is a plain rational
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __repr__(self):
        if self._b == 0:
            return "GaussianRational(%s)" % (Fraction(self._a, self._d),)
        return "GaussianRational(%s, %s)" % (
            Fraction(self._a, self._d),
            Fraction(self._b, self._d),
        )


def _norm(a, b, d):
    g = gcd(a, b, d)
    if g > 1:
        return GaussianRational._raw(a // g, b // g, d // g)
    return GaussianRational._raw(a, b, d)


def _coerce(x):
    if isinstance(x, int):
        return GaussianRational._raw(x, 0, 1)
    if isinstance(x, Fraction):
        return GaussianRational._raw(x.numerator, 0, x.denominator)
    return None


GR_ZERO = GaussianRational._raw(0, 0, 1)
GR_ONE = GaussianRational._raw(1, 0, 1)


# ---------------------------------------------------------------------------
# term-map kernels


def terms_add(f: dict, g: dict) -> dict:
    out = dict(f)
    for key, c in g.items():
        acc = out.get(key)
        if acc is None:
            out[key] = c
        else:
            s = acc + c
            if s.is_zero:
                del out[key]
            else:
                out[key] = s
    return out


def terms_scale(f: dict, c: GaussianRational) -> dict:
    if c.is_zero:
        return {}
    return {key: v * c for key, v in f.items()}


def terms_conj(f: dict) -> dict:
    # conj(z^n conj(z)^m) = z^m conj(z)^n
    return {(m, n): c.conjugate() for (n, m), c in f.items()}


def terms_product(f: dict, g: dict) -> dict:
    out = {}
    for (n1, m1), c1 in f.items():
        for (n2, m2), c2 in g.items():
            key = (n1 + n2, m1 + m2)
            prod = c1 * c2
            acc = out.get(key)
            if acc is None:
                out[key] = prod
            else:
                out[key] = acc + prod
    return {key: c for key, c in out.items() if not c.is_zero}


def terms_inner(f: dict, g: dict) -> GaussianRational:
    s = GR_ZERO
    for (n, m), cf in f.items():
        diff = n - m
        for (k, l), cg in g.items():
            if k - l != diff:
                continue
            s = s + (cf * cg.conjugate())._mul_int_ratio(2, n + m + k + l + 2)
    return s


def terms_complement(f: dict) -> dict:
    """Project a term map onto the orthogonal complement of the harmonic part.

    Monomial rule: z^n conj(z)^m maps to itself minus
    ((n-m+1)/(n+1)) z^(n-m) when m <= n, minus ((m-n+1)/(m+1)) conj(z)^(m-n)
    when m > n.  Harmonic monomials cancel exactly.
    """
    out = {}
    for key, c in f.items():
        n, m = key
        acc = out.get(key)
        if acc is None:
            out[key] = c
        else:
            out[key] = acc + c
        if m <= n:
            hkey = (n - m, 0)
            corr = c._mul_int_ratio(n - m + 1, n + 1)
        else:
            hkey = (0, m - n)
            corr = c._mul_int_ratio(m - n + 1, m + 1)
        acc = out.get(hkey)
        if acc is None:
            out[hkey] = -corr
        else:
            out[hkey] = acc - corr
    return {key: c for key, c in out.items() if not c.is_zero}


def terms_apply(phi: dict, f: dict) -> dict:
    """Dual Toeplitz action on term maps: complement projection of phi*f."""
    return terms_complement(terms_product(phi, f))


# ---------------------------------------------------------------------------
# row kernels for exact elimination


def row_submul(target: list, source: list, c: GaussianRational, lo: int, hi: int):
    """target[j] -= c * source[j] for lo <= j < hi, skipping zero sources."""
    for j in range(lo, hi):
        s = source[j]
        if not (s._a == 0 and s._b == 0):
            target[j] = target[j] - c * s


def bareiss_row(row_i: list, row_k: list, piv, aik, prev, lo: int, hi: int):
    """One fraction-free elimination update: row_i[j] = (piv*row_i[j] - aik*row_k[j]) / prev."""
    for j in range(lo, hi):
        row_i[j] = (piv * row_i[j] - aik * row_k[j]) / prev
