"""Controlling-function calculus.

A ``Majorant`` is a series in y with nonnegative exact rational
coefficients, optionally carrying a geometric tail certificate
``(C, r)`` with ``0 <= r < 1`` asserting ``q_i <= C*r^i`` for relative
indices past the stored window.  ``dominates`` checks coefficient-wise
domination |p_i(x0)| <= q_i exactly; the closure operations return the
right-hand sides of the dominance power/derivative rules and re-verify
both nonnegativity and term-wise domination before returning.

Verdicts are explicitly order-limited: a finite-order check can only
certify the inequality for the exponents it has seen, so every verdict
records the order (None meaning all coefficients were checkable).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (ExponentError, ExponentRangeError, MixedShapeError,
                     NegativeDiscriminant, UncertifiedTail, ZeroLeadingCoefficient)
from .reversion import ReversionResult, formal_inverse, multinomial
from .scalars import Scalar
from .yseries import YSeries, pow_rational


def _frac_of(c) -> Fraction:
    """Real rational value of a constant series coefficient."""
    v = c.constant_value()
    if v.im:
        raise ArithmeticError("expected a real coefficient")
    return v.re


def binom_general(b, j: int) -> Fraction:
    """Generalized binomial coefficient C(b, j) for rational b."""
    return multinomial(Fraction(b), (j,))


def _as_nonneg_fraction(v) -> Fraction:
    f = Fraction(v) if not isinstance(v, Fraction) else v
    if f < 0:
        raise ValueError(f"majorant coefficient {f} is negative")
    return f


class Majorant:
    """One-variable series with nonnegative rational coefficients."""

    __slots__ = ("alpha", "coeffs", "tail")

    def __init__(self, alpha: int, coeffs, tail=None):
        cs = [_as_nonneg_fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        if tail is not None:
            C, r = Fraction(tail[0]), Fraction(tail[1])
            if C < 0 or not (0 <= r < 1):
                raise UncertifiedTail("tail certificate needs C >= 0 and 0 <= r < 1")
            tail = (C, r)
            # spot-check: late stored coefficients must obey the bound
            for i in range(3 * len(cs) // 4, len(cs)):
                if cs[i] > C * r ** i:
                    raise UncertifiedTail(
                        f"stored coefficient q_{i} = {cs[i]} violates C*r^i")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "tail", tail)

    def __setattr__(self, name, value):
        raise AttributeError("Majorant is immutable")

    @classmethod
    def geometric(cls, C, r, N: int, alpha: int = 0) -> "Majorant":
        """C * sum_i (r*y)^i shifted to start at y^alpha, with certificate."""
        C, r = Fraction(C), Fraction(r)
        return cls(alpha, [C * r ** i for i in range(N + 1)], (C, r))

    def q(self, i: int) -> Fraction:
        """Coefficient at relative index i (uses the tail beyond the window)."""
        if i < 0:
            return Fraction(0)
        if i < len(self.coeffs):
            return self.coeffs[i]
        if self.tail is not None:
            C, r = self.tail
            return C * r ** i
        return Fraction(0)

    def known_upto(self) -> int | None:
        """Absolute exponent bound of knowledge: None when a tail certifies
        every coefficient, else first unknown exponent."""
        return None if self.tail is not None else self.alpha + len(self.coeffs)

    def as_yseries(self) -> YSeries:
        return YSeries(self.alpha, [Scalar(c) for c in self.coeffs], None)

    def value_at(self, t: float) -> float:
        """Series value at a real t >= 0 over the stored window."""
        return sum(float(c) * t ** (self.alpha + i) for i, c in enumerate(self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, Majorant):
            return NotImplemented
        return (self.alpha, self.coeffs, self.tail) == (other.alpha, other.coeffs, other.tail)

    def __repr__(self):
        bits = [f"{c}*y^{self.alpha + i}" for i, c in enumerate(self.coeffs) if c]
        body = " + ".join(bits) if bits else "0"
        t = f" + tail{self.tail}" if self.tail else ""
        return f"Majorant[{body}{t}]"


@dataclass(frozen=True)
class DominanceVerdict:
    holds: bool
    order: int | None = None      # first unverified exponent; None = unlimited
    fail_index: int | None = None  # absolute y-exponent of first violation

    def __bool__(self):
        return self.holds


def dominates(P: YSeries, Q: Majorant, x0) -> DominanceVerdict:
    """Check |p_k(x0)| <= q_k exactly for every checkable exponent k.

    The verdict is order-limited: exponents where either side is unknown
    (past a truncation with no tail) are not asserted.
    """
    x0 = Scalar.coerce(x0)
    bounds = [b for b in (P.prec, Q.known_upto()) if b is not None]
    order = min(bounds) if bounds else None
    lo_candidates = []
    if P.coeffs:
        lo_candidates.append(P.alpha)
    if Q.coeffs:
        lo_candidates.append(Q.alpha)
    if not lo_candidates:
        return DominanceVerdict(True, order)
    lo = min(lo_candidates)
    hi_candidates = []
    if P.coeffs:
        hi_candidates.append(P.top_exponent())
    if Q.coeffs or Q.tail:
        hi_candidates.append(Q.alpha + len(Q.coeffs) - 1)
    hi = max(hi_candidates)
    if order is not None:
        hi = min(hi, order - 1)
    for k in range(lo, hi + 1):
        p = P._at(k).eval_exact(x0)
        qk = Q.q(k - Q.alpha)
        if p.abs2() > qk * qk:
            return DominanceVerdict(False, order, fail_index=k)
    return DominanceVerdict(True, order)


def split_parts(Q: Majorant):
    """(ignored part, negative correspondence) of a majorant with q0 > 0.

    igo = q0^{-1} sum_{j>0} q_j y^j  (a majorant starting at y^1);
    inv = q0 y^alpha (1 - igo)       (a signed exact series).
    """
    if not Q.coeffs or not Q.coeffs[0]:
        raise ZeroLeadingCoefficient("split needs q0 > 0")
    q0 = Q.coeffs[0]
    igo = Majorant(1, [c / q0 for c in Q.coeffs[1:]],
                   tail=None if Q.tail is None else (Q.tail[0] * Q.tail[1] / q0, Q.tail[1]))
    inv = YSeries(Q.alpha, [Scalar(q0)] + [Scalar(-c) for c in Q.coeffs[1:]], None)
    return igo, inv


def reassemble(Q: Majorant):
    """q0 y^alpha (1 + igo); equals Q exactly (used as a self-check)."""
    igo, _ = split_parts(Q)
    return Majorant(Q.alpha, [Q.coeffs[0]] + [Q.coeffs[0] * c for c in igo.coeffs])


def _is_power_series_shape(S) -> bool:
    alpha = S.alpha
    return alpha >= 0


def _is_inv_poly_shape(S) -> bool:
    if isinstance(S, Majorant):
        return S.tail is None and S.alpha + len(S.coeffs) - 1 <= 0
    return S.prec is None and (S.is_zero() or S.top_exponent() <= 0)


def derivative_majorant(P: YSeries, Q: Majorant, x0) -> Majorant:
    """Majorant for dP/dy: +dQ/dy for power series, -dQ/dy for
    polynomials in 1/y (the two shape cases of the derivative rule)."""
    x0 = Scalar.coerce(x0)
    if _is_power_series_shape(P) and _is_power_series_shape(Q):
        sign = 1
    elif _is_inv_poly_shape(P) and _is_inv_poly_shape(Q):
        sign = -1
    else:
        raise MixedShapeError("operands must both be power series or both 1/y-polynomials")
    base = dominates(P, Q, x0)
    if not base:
        raise UncertifiedTail(f"dominance hypothesis fails at exponent {base.fail_index}")
    # the tail of Q (if any) is dropped: d/dy of a geometric bound is not
    # geometric, so the emitted verdict is order-limited by the window
    cs = {}
    for i, c in enumerate(Q.coeffs):
        k = Q.alpha + i
        if k != 0 and c:
            cs[k - 1] = Fraction(sign * k) * c
    if not cs:
        return Majorant(0, [])
    lo = min(cs)
    out = Majorant(lo, [cs.get(k, Fraction(0)) for k in range(lo, max(cs) + 1)])
    chk = dominates(P.diff_y(), out, x0)
    if not chk:
        raise ArithmeticError(f"derivative rule violated at exponent {chk.fail_index}")
    return out


def _exact_frac_pow(q: Fraction, e: Fraction) -> Fraction:
    """q**e as an exact rational, or raise when not representable."""
    if e.denominator == 1:
        return q ** int(e)
    if q == 1:
        return Fraction(1)
    num = _iroot(q.numerator, e.denominator)
    den = _iroot(q.denominator, e.denominator)
    if num is None or den is None:
        raise ExponentRangeError(f"{q}^{e} is irrational; choose a friendlier q0")
    return Fraction(num, den) ** e.numerator


def _iroot(n: int, k: int) -> int | None:
    if n < 0:
        return None
    r = round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** k == n:
            return cand
    return None


def power_majorant(P: YSeries, Q: Majorant, x0, a=None, b=None, k=None, N: int = 16) -> Majorant:
    """Right-hand-side majorants of the dominance power rules.

    Mode 1 (a, b given, both negative rationals): majorant for P^a equal
    to (q0 y^alpha)^{-b} Q_inv^{a+b} = (q0 y^alpha)^a (1 - Q_igo)^{a+b}.
    Mode 2 (k given): majorant for Q^k, namely
    (q0 y^alpha)^k (1 - k Q_igo)^{-1} for integer k >= 1, and
    (q0 y^alpha)^k (1 + k Q_igo (1 - Q_igo)^{-1}) for rational 0 <= k < 1.

    All emitted coefficients are re-verified nonnegative and the claimed
    dominance is re-checked term-wise to the emitted order.
    """
    x0 = Scalar.coerce(x0)
    if not Q.coeffs or not Q.coeffs[0]:
        raise ZeroLeadingCoefficient("rules need q0 > 0")
    q0 = Q.coeffs[0]
    igo, _ = split_parts(Q)
    igo_y = igo.as_yseries().truncate(N + 1)

    if k is None:
        a, b = Fraction(a), Fraction(b)
        if a >= 0 or b >= 0:
            raise ExponentRangeError("mode 1 needs a, b < 0")
        base = dominates(P, Q, x0)
        if not base:
            raise UncertifiedTail(f"dominance hypothesis fails at exponent {base.fail_index}")
        p0 = P.leading().eval_exact(x0)
        if p0.abs2() != q0 * q0:
            raise ExponentRangeError("rule needs |p0(x0)| = q0 exactly")
        e_y = a * Q.alpha
        if e_y.denominator != 1:
            raise ExponentError("alpha*a must be an integer")
        head = _exact_frac_pow(q0, a)
        one_minus = YSeries.const(1) - igo_y
        body = pow_rational(one_minus, a + b, N)
        cs = [head * _frac_of(body._at(i)) for i in range(N + 1)]
        out = Majorant(int(e_y), cs)
        target = pow_rational(P, a, N)
        chk = dominates(target, out, x0)
        if not chk:
            raise ArithmeticError(f"power rule violated at exponent {chk.fail_index}")
        return out

    k = Fraction(k)
    if not ((k.denominator == 1 and k >= 1) or 0 <= k < 1):
        raise ExponentRangeError("mode 2 needs integer k >= 1 or rational 0 <= k < 1")
    e_y = k * Q.alpha
    if e_y.denominator != 1:
        raise ExponentError("alpha*k must be an integer")
    head = _exact_frac_pow(q0, k)
    if k.denominator == 1 and k >= 1:
        geo = YSeries.const(1) - igo_y.scale(Scalar(k))
        body = pow_rational(geo, -1, N)
    else:
        inv = pow_rational(YSeries.const(1) - igo_y, -1, N)
        body = YSeries.const(1) + (igo_y * inv).scale(Scalar(k))
    cs = [head * _frac_of(body._at(i)) for i in range(N + 1)]
    out = Majorant(int(e_y), cs)

    # dominance target: Q^k = q0^k y^(alpha k) (1 + igo)^k
    tgt_body = pow_rational(YSeries.const(1) + igo_y, k, N)
    target = tgt_body.shift(int(e_y)).scale(Scalar(head))
    chk = dominates(target, out, x0)
    if not chk:
        raise ArithmeticError(f"power rule violated at exponent {chk.fail_index}")
    return out


def majorant_inverse(Phi: Majorant, N: int, check: bool = True) -> ReversionResult:
    """Reversion of Phi_inv = a1 z - sum_{i>=2} a_i z^i for a majorant
    Phi = a1 z + ... with a1 > 0; all coefficients of the inverse are
    nonnegative (machine-checked to order N)."""
    if Phi.alpha != 1:
        raise ZeroLeadingCoefficient("majorant must start at z^1")
    if not Phi.coeffs or Phi.coeffs[0] <= 0:
        raise ZeroLeadingCoefficient("needs a1 > 0")
    f = [Phi.coeffs[0]] + [-c for c in Phi.coeffs[1:]]
    res = formal_inverse(f, N, check=check)
    for i in range(1, N + 1):
        if res.coeffs[i] < 0:
            raise ArithmeticError(f"inverse coefficient b_{i} = {res.coeffs[i]} is negative")
    return res


def quadratic_majorant_inverse(u_abs, eps_pow, Pinv_val) -> float:
    """Closed-form inverse of the quadratic controlling function
    |u|^{-1} y (1 - 2qy) / (1 - qy): solves for y at a given value.

    Returns (1 + q*|u|*v - sqrt(1 - 6 q |u| v + q^2 |u|^2 v^2)) / (4q)
    with q = eps_pow and v = Pinv_val.
    """
    u_abs, q, v = float(u_abs), float(eps_pow), float(Pinv_val)
    if u_abs <= 0 or q <= 0 or v < 0:
        raise ValueError("needs u_abs > 0, eps_pow > 0, Pinv_val >= 0")
    t = q * u_abs * v
    disc = 1 - 6 * t + t * t
    if disc < 0:
        raise NegativeDiscriminant(f"discriminant {disc} < 0: outside the convergence disk")
    return (1 + t - math.sqrt(disc)) / (4 * q)


@dataclass(frozen=True)
class AbsConvReport:
    value: float
    certified: bool
    remainder_bound: float | None = None


def abs_conv_value(P: YSeries, x0, y0, Q: Majorant) -> AbsConvReport:
    """sum |p_i(x0) y0^(alpha+i)| over the stored window, with the
    remainder bounded through Q's geometric tail at |y0|."""
    x0, y0 = Scalar.coerce(x0), Scalar.coerce(y0)
    base = dominates(P, Q, x0)
    if not base:
        raise UncertifiedTail(f"dominance hypothesis fails at exponent {base.fail_index}")
    if Q.tail is None:
        raise UncertifiedTail("majorant carries no tail certificate")
    ay = y0.abs_float()
    partial = 0.0
    for i, c in enumerate(P.coeffs):
        partial += c.eval_exact(x0).abs_float() * ay ** (P.alpha + i)
    if P.prec is None:
        return AbsConvReport(partial, True, 0.0)
    C, r = float(Q.tail[0]), float(Q.tail[1])
    rho = r * ay
    if rho >= 1:
        return AbsConvReport(partial, False)
    # remainder over exponents past P's window: stored part of Q first,
    # then the geometric certificate
    start_rel = P.prec - Q.alpha
    mid = sum(float(Q.coeffs[i]) * ay ** (Q.alpha + i)
              for i in range(max(start_rel, 0), len(Q.coeffs)))
    geo_from = max(start_rel, len(Q.coeffs))
    geom = C * ay ** Q.alpha * rho ** geo_from / (1 - rho) if ay > 0 else 0.0
    return AbsConvReport(partial, True, mid + geom)
