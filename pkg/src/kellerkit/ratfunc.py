"""Univariate polynomials in x over exact scalars, and their quotients.

``XPoly`` is dense (tuple of Scalars, index = degree, no trailing
zeros).  ``RatFunc`` is a reduced quotient num/den with monic
denominator; reduction divides out the polynomial gcd so that equal
rational functions compare equal structurally.  Evaluation at a point
is defined whenever the denominator does not vanish there.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .errors import PoleAtX0
from .scalars import Scalar, ZERO, ONE


class XPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Scalar.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("XPoly is immutable")

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def leading(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __getitem__(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __eq__(self, other):
        if isinstance(other, XPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly([self[k] + other[k] for k in range(n)])

    def __sub__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly([self[k] - other[k] for k in range(n)])

    def __neg__(self):
        return XPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, XPoly):
            if not self.coeffs or not other.coeffs:
                return XPoly()
            out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return XPoly(out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c):
        c = Scalar.coerce(c)
        if not c:
            return XPoly()
        return XPoly([a * c for a in self.coeffs])

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of an XPoly")
        out, base = XPoly.const(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def derivative(self) -> "XPoly":
        return XPoly([self.coeffs[k] * k for k in range(1, len(self.coeffs))])

    def divmod(self, other: "XPoly"):
        if other.is_zero():
            raise ZeroDivisionError("division by zero XPoly")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return XPoly(), self
        inv_lead = other.leading().inverse()
        quo = [ZERO] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree()] * inv_lead
            if c:
                quo[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return XPoly(quo), XPoly(rem)

    def monic(self) -> "XPoly":
        if self.is_zero():
            return self
        return self.scale(self.leading().inverse())

    def compose(self, other: "XPoly") -> "XPoly":
        """self(other(x)) by Horner."""
        out = XPoly()
        for c in reversed(self.coeffs):
            out = out * other + XPoly.const(c)
        return out

    def eval_exact(self, x0) -> Scalar:
        x0 = Scalar.coerce(x0)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def eval_float(self, x0: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * x0 + complex(c)
        return acc

    def coeff_abs_sum(self) -> float:
        """Upper bound for |p(x)| on |x| <= 1."""
        return sum(c.abs_float() for c in self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "XPoly(0)"
        bits = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            bits.append(f"({c}){mono}" if mono else f"({c})")
        return "XPoly(" + " + ".join(bits) + ")"


def xpoly_gcd(a: XPoly, b: XPoly) -> XPoly:
    """Monic Euclidean gcd over the exact coefficient field."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
        if not b.is_zero():
            b = b.monic()
    return a.monic() if not a.is_zero() else a


_COERCIBLE = (int, Fraction, Scalar, Rational)


class RatFunc:
    """Reduced quotient of two XPolys with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if isinstance(num, _COERCIBLE):
            num = XPoly.const(Scalar.coerce(num))
        if den is None:
            den = XPoly.const(1)
        elif isinstance(den, _COERCIBLE):
            den = XPoly.const(Scalar.coerce(den))
        if den.is_zero():
            raise ZeroDivisionError("RatFunc with zero denominator")
        if num.is_zero():
            num, den = XPoly(), XPoly.const(1)
        elif not _reduced:
            if den.degree() == 0:
                num = num.scale(den.leading().inverse())
                den = XPoly.const(1)
            else:
                g = xpoly_gcd(num, den)
                if g.degree() > 0:
                    num = num.divmod(g)[0]
                    den = den.divmod(g)[0]
                lead = den.leading()
                if lead != ONE:
                    inv = lead.inverse()
                    num, den = num.scale(inv), den.scale(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def const(cls, c):
        return cls(XPoly.const(c), None, _reduced=True)

    @classmethod
    def x(cls):
        return cls(XPoly.x(), None, _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() == 0

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("not a constant rational function")
        return self.num[0] if self.num.coeffs else ZERO

    def __eq__(self, other):
        other = _rf(other)
        if other is None:
            return NotImplemented
        if self.num == other.num and self.den == other.den:
            return True
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _rf(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _rf(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _rf(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __mul__(self, other):
        other = _rf(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _rf(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _rf(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero RatFunc")
        return RatFunc(self.den, self.num)

    def __pow__(self, e: int):
        if e == 0:
            return RatFunc.const(1)
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num ** e, self.den ** e, _reduced=True)

    def derivative(self) -> "RatFunc":
        return RatFunc(self.num.derivative() * self.den - self.num * self.den.derivative(),
                       self.den * self.den)

    def compose_poly(self, q: XPoly) -> "RatFunc":
        """self(q(x)) for a polynomial substitution."""
        return RatFunc(self.num.compose(q), self.den.compose(q))

    def compose_rat(self, q: "RatFunc") -> "RatFunc":
        """self(q(x)) for a rational substitution."""
        d = max(self.num.degree(), self.den.degree(), 0)
        qn_pow = [XPoly.const(1)]
        qd_pow = [XPoly.const(1)]
        for _ in range(d):
            qn_pow.append(qn_pow[-1] * q.num)
            qd_pow.append(qd_pow[-1] * q.den)

        def lift(p: XPoly) -> XPoly:
            out = XPoly()
            for k in range(p.degree() + 1):
                c = p[k]
                if c:
                    out = out + (qn_pow[k] * qd_pow[d - k]).scale(c)
            return out

        return RatFunc(lift(self.num), lift(self.den))

    def eval_exact(self, x0) -> Scalar:
        x0 = Scalar.coerce(x0)
        dv = self.den.eval_exact(x0)
        if not dv:
            raise PoleAtX0(f"denominator vanishes at {x0}")
        return self.num.eval_exact(x0) / dv

    def eval_float(self, x0: complex) -> complex:
        dv = self.den.eval_float(x0)
        if dv == 0:
            raise PoleAtX0(f"denominator vanishes at {x0}")
        return self.num.eval_float(x0) / dv

    def __repr__(self):
        if self.den == XPoly.const(1):
            return f"RatFunc({self.num!r})"
        return f"RatFunc({self.num!r} / {self.den!r})"


def _rf(v):
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, XPoly):
        return RatFunc(v)
    if isinstance(v, _COERCIBLE):
        return RatFunc.const(Scalar.coerce(v))
    return None


RF_ZERO = RatFunc.const(0)
RF_ONE = RatFunc.const(1)
