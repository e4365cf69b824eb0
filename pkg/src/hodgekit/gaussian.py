"""Exact complex scalars a + b*i with rational a, b."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

__all__ = ["GaussianRational", "I", "ONE", "ZERO", "as_gaussian", "parse_fraction"]


def parse_fraction(text) -> mpq:
    """Read a rational from ``int``, ``Fraction``, ``mpq`` or a ``"num/den"`` string."""
    if isinstance(text, str):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/")
            den = int(den)
            if den == 0:
                raise ZeroDivisionError(f"zero denominator in {text!r}")
            return mpq(int(num), den)
        return mpq(int(text))
    if isinstance(text, (int, Fraction, type(mpq(0)))):
        return mpq(text)
    if isinstance(text, Rational):
        return mpq(int(text.numerator), int(text.denominator))
    raise TypeError(f"not an exact rational: {text!r}")


def _fmt(q: mpq) -> str:
    return f"{q.numerator}/{q.denominator}"


class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", parse_fraction(re))
        object.__setattr__(self, "im", parse_fraction(im))

    @classmethod
    def _raw(cls, re: mpq, im: mpq) -> "GaussianRational":
        self = object.__new__(cls)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (Fraction(int(self.re.numerator), int(self.re.denominator)),
                                   Fraction(int(self.im.numerator), int(self.im.denominator))))

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational._raw(self.re / n, -self.im / n)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def norm(self) -> mpq:
        """|z|^2, an exact rational."""
        return self.re * self.re + self.im * self.im

    # predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(Fraction(int(self.re.numerator), int(self.re.denominator)))
        return hash((self.re, self.im))

    # conversions ----------------------------------------------------------

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def _sympy_(self):
        import sympy

        re = sympy.Rational(int(self.re.numerator), int(self.re.denominator))
        im = sympy.Rational(int(self.im.numerator), int(self.im.denominator))
        return re + sympy.I * im

    def to_json(self) -> dict:
        return {"re": _fmt(self.re), "im": _fmt(self.im)}

    @classmethod
    def from_json(cls, obj: dict) -> "GaussianRational":
        return cls(obj.get("re", "0/1"), obj.get("im", "0/1"))

    def __repr__(self):
        if self.im == 0:
            return f"GR({self.re})"
        return f"GR({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


_MPQ = type(mpq(0))


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, _MPQ, Fraction)):
        return GaussianRational._raw(mpq(x), mpq(0))
    # sympy numbers register as numbers.Rational; let sympy handle the mix
    return NotImplemented


def as_gaussian(x) -> GaussianRational:
    """Coerce ints, fractions, or ``complex`` with integral parts into a GaussianRational."""
    if isinstance(x, complex):
        if x.real != int(x.real) or x.imag != int(x.imag):
            raise TypeError(f"refusing inexact complex {x!r}")
        return GaussianRational(int(x.real), int(x.imag))
    y = _coerce(x)
    if y is NotImplemented:
        raise TypeError(f"cannot coerce {x!r} to GaussianRational")
    return y


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)
