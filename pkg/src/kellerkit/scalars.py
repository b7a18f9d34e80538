"""Exact complex scalars: Gaussian rationals with a float view.

A ``Scalar`` is a complex number ``re + im*i`` whose real and imaginary
parts are arbitrary-precision rationals (``fractions.Fraction``).  All
ring operations and division by nonzero values are exact.  Powers with
an integer exponent stay exact; powers with a real non-integer exponent
use the principal branch ``a^b = r^b * exp(i*b*theta)`` for
``a = r*exp(i*theta)`` with ``-pi < theta <= pi`` and are float-only.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from numbers import Rational

_FractionLike = (int, Fraction)


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, str, Rational)):
        return Fraction(v)
    if isinstance(v, float):
        return Fraction(v)  # exact binary value of the float
    raise TypeError(f"cannot build an exact rational from {v!r}")


class Scalar:
    """Exact Gaussian-rational complex number."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def from_complex(cls, z: complex) -> "Scalar":
        """Exact conversion: every float is a rational."""
        z = complex(z)
        return cls(Fraction(z.real), Fraction(z.imag))

    @classmethod
    def coerce(cls, v) -> "Scalar":
        if isinstance(v, Scalar):
            return v
        if isinstance(v, complex):
            return cls.from_complex(v)
        return cls(_as_fraction(v))

    # ------------------------------------------------------------------ ring
    def __add__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return Scalar(other.re - self.re, other.im - self.im)

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return Scalar(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def inverse(self) -> "Scalar":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of zero Scalar")
        return Scalar(self.re / n, -self.im / n)

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def __pow__(self, e):
        if isinstance(e, int) or (isinstance(e, Fraction) and e.denominator == 1):
            e = int(e)
            if e == 0:
                return Scalar(1)
            base = self if e > 0 else self.inverse()
            out = Scalar(1)
            k = abs(e)
            while k:
                if k & 1:
                    out = out * base
                base = base * base
                k >>= 1
            return out
        return self.principal_pow(e)

    def principal_pow(self, b) -> complex:
        """Principal-branch power ``r^b * exp(i*b*theta)`` as a complex float.

        ``b`` must be real.  The argument theta is taken in ``(-pi, pi]``,
        so negative reals land on the upper branch cut.
        """
        if isinstance(self, Scalar) and self.is_zero():
            if b > 0:
                return 0j
            raise ZeroDivisionError("0 raised to a nonpositive power")
        b = float(b)
        r = self.abs_float()
        theta = math.atan2(float(self.im), float(self.re))
        return (r ** b) * cmath.exp(1j * b * theta)

    # ----------------------------------------------------------- predicates
    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    # ----------------------------------------------------------------- views
    def abs2(self) -> Fraction:
        """|a|^2 as an exact rational."""
        return self.re * self.re + self.im * self.im

    def abs_float(self) -> float:
        return math.hypot(float(self.re), float(self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    @property
    def float_view(self) -> complex:
        return complex(self)

    def __repr__(self):
        return f"Scalar({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_scalar(self)


def _coerce_or_none(v):
    if isinstance(v, Scalar):
        return v
    if isinstance(v, _FractionLike) or isinstance(v, Rational):
        return Scalar(v)
    return None


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def format_scalar(a: Scalar) -> str:
    """Render as ``p/q+r/s*i`` (the JSON wire format for exact values)."""
    if not a.im:
        return str(a.re)
    if not a.re:
        return f"{a.im}*i"
    sign = "+" if a.im >= 0 else "-"
    return f"{a.re}{sign}{abs(a.im)}*i"


def parse_scalar(text) -> Scalar:
    """Parse ``p/q+r/s*i`` strings; also accepts ints/floats and
    ``{"re": .., "im": ..}`` dicts coming from JSON."""
    if isinstance(text, dict):
        return Scalar(_as_fraction(text.get("re", 0)), _as_fraction(text.get("im", 0)))
    if isinstance(text, (int, float, Fraction)):
        return Scalar(_as_fraction(text))
    s = str(text).replace(" ", "")
    if not s:
        raise ValueError("empty scalar literal")
    if not s.endswith("i"):
        return Scalar(Fraction(s))
    body = s[:-1]
    if body.endswith("*"):
        body = body[:-1]
    # split real and imaginary at the last +/- that is not inside a fraction sign
    for k in range(len(body) - 1, 0, -1):
        if body[k] in "+-" and body[k - 1] not in "+-*/":
            re_part, im_part = body[:k], body[k:]
            if im_part in ("+", "-"):
                im_part += "1"
            return Scalar(Fraction(re_part), Fraction(im_part))
    if body in ("", "+", "-"):
        body += "1"
    return Scalar(0, Fraction(body))
