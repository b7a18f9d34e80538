"""Truncated Laurent series in y with rational-function coefficients.

A ``YSeries`` represents

    sum_{k=alpha}^{alpha+len(coeffs)-1} coeffs[k-alpha] * y^k   (+ O(y^prec))

where each coefficient is a ``RatFunc`` in x.  ``prec is None`` means the
object is an exact (finite) Laurent polynomial; otherwise every exponent
below ``prec`` is stored and exponents >= prec are unknown.  Arithmetic
propagates the validity order: sums keep the weaker precision, products
account for the valuation shift of the unknown tails.

Fractional powers follow the fixed-branch convention: they require the
leading coefficient to be exactly 1 (else only integer exponents are
allowed), and the y-exponent alpha*beta must be an integer.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BranchError, ExponentError, IllDefinedError, UncertifiedTail
from .ratfunc import RatFunc, RF_ONE, RF_ZERO, XPoly
from .scalars import Scalar, ZERO


def _coerce_rf(c) -> RatFunc:
    if isinstance(c, RatFunc):
        return c
    if isinstance(c, XPoly):
        return RatFunc(c)
    return RatFunc.const(Scalar.coerce(c))


def _min_prec(*precs):
    known = [p for p in precs if p is not None]
    return min(known) if known else None


class YSeries:
    __slots__ = ("alpha", "coeffs", "prec")

    def __init__(self, alpha: int, coeffs, prec: int | None = None):
        cs = [_coerce_rf(c) for c in coeffs]
        if prec is not None:
            want = prec - alpha
            if want < 0:
                raise ValueError("prec below the leading exponent")
            cs = cs[:want] + [RF_ZERO] * (want - len(cs))
        while cs and cs[0].is_zero():
            cs.pop(0)
            alpha += 1
        if prec is None:
            while cs and cs[-1].is_zero():
                cs.pop()
        if not cs:
            alpha = prec if prec is not None else 0
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "prec", prec)

    def __setattr__(self, name, value):
        raise AttributeError("YSeries is immutable")

    # ------------------------------------------------------------ builders
    @classmethod
    def zero(cls, prec: int | None = None):
        return cls(0 if prec is None else prec, (), prec)

    @classmethod
    def const(cls, c, prec: int | None = None):
        return cls(0, (c,), prec)

    @classmethod
    def y_power(cls, k: int, coeff=1, prec: int | None = None):
        return cls(k, (coeff,), prec)

    @classmethod
    def from_scalars(cls, alpha: int, values, prec: int | None = None):
        return cls(alpha, [Scalar.coerce(v) for v in values], prec)

    # ------------------------------------------------------------- queries
    def is_zero(self) -> bool:
        return not self.coeffs

    def is_exact(self) -> bool:
        return self.prec is None

    def top_exponent(self) -> int:
        """Highest stored exponent; only meaningful for nonzero series."""
        return self.alpha + len(self.coeffs) - 1

    def leading(self) -> RatFunc:
        if not self.coeffs:
            raise ValueError("leading coefficient of a zero series")
        return self.coeffs[0]

    def coeff(self, k: int) -> RatFunc:
        """Coefficient of y^k; raises beyond a truncated window."""
        if self.prec is not None and k >= self.prec:
            raise IllDefinedError(f"coefficient of y^{k} unknown beyond O(y^{self.prec})")
        idx = k - self.alpha
        if 0 <= idx < len(self.coeffs):
            return self.coeffs[idx]
        return RF_ZERO

    def rel_coeff(self, i: int) -> RatFunc:
        """Coefficient at relative offset i from the leading exponent."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else RF_ZERO

    def __eq__(self, other):
        if not isinstance(other, YSeries):
            return NotImplemented
        return (self.alpha == other.alpha and self.prec == other.prec
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.alpha, self.prec, self.coeffs))

    # ---------------------------------------------------------- arithmetic
    def __add__(self, other):
        if not isinstance(other, YSeries):
            other = YSeries.const(other)
        prec = _min_prec(self.prec, other.prec)
        lows = [s.alpha for s in (self, other) if s.coeffs]
        if not lows:
            return YSeries.zero(prec)
        lo = min(lows)
        hi = (prec - 1 if prec is not None
              else max(s.top_exponent() for s in (self, other) if s.coeffs))
        cs = [self._at(k) + other._at(k) for k in range(lo, hi + 1)]
        return YSeries(lo, cs, prec)

    def _at(self, k: int) -> RatFunc:
        idx = k - self.alpha
        if 0 <= idx < len(self.coeffs):
            return self.coeffs[idx]
        return RF_ZERO

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, YSeries):
            other = YSeries.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return YSeries(self.alpha, [-c for c in self.coeffs], self.prec)

    def scale(self, c) -> "YSeries":
        c = _coerce_rf(c)
        return YSeries(self.alpha, [a * c for a in self.coeffs], self.prec)

    def __mul__(self, other):
        if not isinstance(other, YSeries):
            return self.scale(other)
        if self.is_zero() and self.prec is None:
            return YSeries.zero(None)
        if other.is_zero() and other.prec is None:
            return YSeries.zero(None)
        precs = []
        if self.prec is not None:
            precs.append(self.prec + other.alpha)
        if other.prec is not None:
            precs.append(other.prec + self.alpha)
        prec = min(precs) if precs else None
        if self.is_zero() or other.is_zero():
            return YSeries.zero(prec)
        lo = self.alpha + other.alpha
        hi = self.top_exponent() + other.top_exponent()
        if prec is not None:
            hi = min(hi, prec - 1)
        out = [RF_ZERO] * (hi - lo + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            base = self.alpha + i + other.alpha - lo
            for j, b in enumerate(other.coeffs):
                k = base + j
                if k > hi - lo:
                    break
                if not b.is_zero():
                    out[k] = out[k] + a * b
        return YSeries(lo, out, prec)

    __rmul__ = __mul__

    def shift(self, k: int) -> "YSeries":
        """Multiply by y^k."""
        return YSeries(self.alpha + k, self.coeffs,
                       None if self.prec is None else self.prec + k)

    def truncate(self, prec: int) -> "YSeries":
        if self.prec is not None and prec > self.prec:
            raise IllDefinedError("cannot extend a truncated series")
        return YSeries(self.alpha, self.coeffs, prec)

    def diff_y(self) -> "YSeries":
        cs = []
        for i, c in enumerate(self.coeffs):
            k = self.alpha + i
            cs.append(c * Scalar(k))
        return YSeries(self.alpha - 1, cs,
                       None if self.prec is None else self.prec - 1)

    def diff_x(self) -> "YSeries":
        return YSeries(self.alpha, [c.derivative() for c in self.coeffs], self.prec)

    # ---------------------------------------------------------- evaluation
    def eval_exact(self, x0, y0) -> Scalar:
        """Partial sum over the stored window at exact coordinates."""
        x0, y0 = Scalar.coerce(x0), Scalar.coerce(y0)
        acc = ZERO
        for i, c in enumerate(self.coeffs):
            acc = acc + c.eval_exact(x0) * (y0 ** (self.alpha + i))
        return acc

    def eval_float(self, x0: complex, y0: complex) -> complex:
        acc = 0j
        yk = y0 ** self.alpha
        for c in self.coeffs:
            acc += c.eval_float(x0) * yk
            yk *= y0
        return acc

    def coeff_floats(self, x0: complex) -> tuple[int, list]:
        """(alpha, [c_i(x0)]) as complex floats, for numeric solvers."""
        return self.alpha, [c.eval_float(x0) for c in self.coeffs]

    def __repr__(self):
        bits = []
        for i, c in enumerate(self.coeffs):
            k = self.alpha + i
            if c.is_zero():
                continue
            mono = "" if k == 0 else ("y" if k == 1 else f"y^{k}")
            bits.append(f"({c!r})*{mono}" if mono else f"({c!r})")
        body = " + ".join(bits) if bits else "0"
        tail = f" + O(y^{self.prec})" if self.prec is not None else ""
        return f"YSeries[{body}{tail}]"


def pow_rational(P: YSeries, beta, N: int) -> YSeries:
    """P^beta truncated to N terms past the leading exponent.

    Follows the fixed-branch convention: fractional beta requires the
    leading coefficient to be exactly 1; alpha*beta must be an integer.
    The expansion is y^(alpha*beta) * sum_j binom(beta, j) W^j with
    W = sum_{i>0} p_i y^i / p_0.
    """
    beta = Fraction(beta)
    if P.is_zero():
        if beta > 0:
            return YSeries.zero(P.prec)
        raise ExponentError("nonpositive power of a zero series")
    p0 = P.leading()
    integer = beta.denominator == 1
    if not integer and p0 != RF_ONE:
        raise BranchError("fractional power needs leading coefficient 1")
    ab = beta * P.alpha
    if ab.denominator != 1:
        raise ExponentError(f"alpha*beta = {ab} is not an integer")
    new_alpha = int(ab)

    if P.prec is None and integer and beta >= 0:
        # positive integer power of an exact Laurent polynomial stays exact
        out, b, base = YSeries.const(1), int(beta), P
        while b:
            if b & 1:
                out = out * base
            base = base * base
            b >>= 1
        return out

    rel = len(P.coeffs) - 1 if P.prec is None else P.prec - P.alpha - 1
    n_eff = N if P.prec is None else min(N, rel)
    inv_p0 = p0.inverse()
    w = [P.rel_coeff(i) * inv_p0 for i in range(1, min(len(P.coeffs), n_eff + 1))]

    # sum_j binom(beta, j) W^j, truncated at relative order n_eff
    acc = [RF_ZERO] * (n_eff + 1)
    acc[0] = RF_ONE
    term = [RF_ZERO] * (n_eff + 1)
    term[0] = RF_ONE
    for j in range(1, n_eff + 1):
        coef = Fraction(beta - j + 1, j)
        nxt = [RF_ZERO] * (n_eff + 1)
        for a_idx in range(n_eff + 1 - 1):
            ta = term[a_idx]
            if ta.is_zero():
                continue
            for b_idx, wb in enumerate(w, start=1):
                k = a_idx + b_idx
                if k > n_eff:
                    break
                if not wb.is_zero():
                    nxt[k] = nxt[k] + ta * wb
        term = [t * Scalar(coef) for t in nxt]
        if all(t.is_zero() for t in term):
            break
        for k in range(n_eff + 1):
            acc[k] = acc[k] + term[k]

    if integer:
        head = p0 ** int(beta)
        acc = [c * head for c in acc]
    return YSeries(new_alpha, acc, new_alpha + n_eff + 1)


def compose_series(P: YSeries, Q1, Q2, N: int | None = None):
    """Substitute x -> Q1 and y -> Q2 in P.

    Q1 may be None (identity), a Scalar, an XPoly or a RatFunc; Q2 may be
    a Scalar or a YSeries.  With scalar Q2 the result is the value of the
    stored window (a Scalar, or a y-free YSeries when Q1 keeps x alive).
    Raises IllDefinedError when the substitution is not determined to the
    requested order (infinite P with Q2 of nonpositive valuation).
    """
    if N is None:
        N = max(16, len(P.coeffs))

    def xc(c: RatFunc) -> RatFunc:
        if Q1 is None or (isinstance(Q1, str) and Q1 == "x"):
            return c
        if isinstance(Q1, RatFunc):
            return c.compose_rat(Q1)
        if isinstance(Q1, XPoly):
            return c.compose_poly(Q1)
        v = Scalar.coerce(Q1)
        return RatFunc.const(c.eval_exact(v))

    if not isinstance(Q2, YSeries):
        q2 = Scalar.coerce(Q2)
        acc = RF_ZERO
        for i, c in enumerate(P.coeffs):
            k = P.alpha + i
            if not q2 and k < 0:
                raise IllDefinedError("negative power of zero in substitution")
            if q2 or k == 0:
                acc = acc + xc(c) * RatFunc.const(q2 ** k)
        if acc.is_constant():
            return acc.constant_value()
        return YSeries(0, (acc,), None)

    if P.is_zero():
        return YSeries.zero(P.prec)

    w = Q2.alpha if Q2.coeffs else (Q2.prec if Q2.prec is not None else 1)
    infinite_p = P.prec is not None
    if infinite_p and w < 1:
        raise IllDefinedError("substituted series must have positive valuation")
    if not Q2.coeffs and P.alpha < 0:
        raise IllDefinedError("negative power of an (order-)zero series")

    # powers of Q2 starting at Q2^alpha
    out = None
    power = pow_rational(Q2, P.alpha, N) if P.alpha != 0 else YSeries.const(1)
    for i, c in enumerate(P.coeffs):
        term = power.scale(xc(c)) if not c.is_zero() else None
        if term is not None:
            out = term if out is None else out + term
        if i + 1 < len(P.coeffs):
            power = power * Q2
    if out is None:
        out = YSeries.zero(None)
    if infinite_p:
        tail_from = w * P.prec if w > 0 else None
        out = out.truncate(_min_prec(out.prec, tail_from))
    return out


def rebase_coeff(Q: YSeries, P: YSeries, count: int) -> list:
    """Coefficients b_i with Q = sum_i b_i P^((beta+i)/alpha) to `count`
    orders in y, found by iterative elimination of the leading term."""
    if P.is_zero() or P.alpha == 0:
        raise ExponentError("base series must have nonzero leading exponent")
    alpha, beta = P.alpha, Q.alpha
    if Q.is_zero():
        return [RF_ZERO] * count
    bs = []
    R = Q
    for i in range(count):
        k = beta + i
        e = Fraction(k, alpha)
        r = R.coeff(k) if (R.prec is None or k < R.prec) else None
        if r is None:
            raise IllDefinedError(f"series only known to O(y^{R.prec}); cannot match y^{k}")
        if r.is_zero():
            bs.append(RF_ZERO)
            continue
        Pe = pow_rational(P, e, count - i + 1)
        lead = Pe.coeff(k)
        b = r / lead
        bs.append(b)
        R = R - Pe.scale(b)
    return bs


def rebase_expand(P: YSeries, beta: int, bs, upto: int) -> YSeries:
    """sum_i bs[i] * P^((beta+i)/alpha) truncated below y^upto."""
    acc = YSeries.zero(upto)
    for i, b in enumerate(bs):
        b = _coerce_rf(b)
        if b.is_zero() or beta + i >= upto:
            continue
        e = Fraction(beta + i, P.alpha)
        acc = acc + pow_rational(P, e, upto - 1 - (beta + i)).scale(b)
    return acc.truncate(upto) if acc.prec is None or acc.prec > upto else acc


class EvalReport:
    """Value of a series at a point, with an optional certified tail."""

    __slots__ = ("value", "certified", "remainder_bound")

    def __init__(self, value, certified, remainder_bound=None):
        self.value = value
        self.certified = certified
        self.remainder_bound = remainder_bound

    def __repr__(self):
        return (f"EvalReport(value={self.value}, certified={self.certified}, "
                f"remainder_bound={self.remainder_bound})")


def eval_certified(P: YSeries, x0, y0, tail=None, tol: float | None = None) -> EvalReport:
    """Partial sum at (x0, y0) plus a geometric tail certificate.

    ``tail=(C, r)`` asserts |p_i(x0)| <= C*r^i for relative indices past
    the stored window; the remainder is then bounded whenever |y0|*r < 1.
    ``certified`` requires the bound to exist (and to be <= tol if given).
    """
    x0, y0 = Scalar.coerce(x0), Scalar.coerce(y0)
    value = P.eval_exact(x0, y0)
    if tail is None:
        return EvalReport(value, False)
    C, r = float(tail[0]), float(tail[1])
    if C < 0 or r < 0:
        raise UncertifiedTail("tail constants must be nonnegative")
    ay0 = y0.abs_float()
    if ay0 * r >= 1 or (ay0 == 0 and P.alpha < 0):
        return EvalReport(value, False)
    K = len(P.coeffs) - 1
    q = ay0 * r
    bound = C * (ay0 ** P.alpha) * (q ** (K + 1)) / (1 - q) if q > 0 else 0.0
    certified = tol is None or bound <= tol
    return EvalReport(value, certified, bound)
