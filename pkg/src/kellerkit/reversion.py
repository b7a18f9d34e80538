"""Formal inverse (reversion) of a series F = f1*z + f2*z^2 + ...

Writes z as a series in F: z = b1*F + b2*F^2 + ..., with b1 = 1/f1 and,
for i >= 2,

    b_i = - sum_{j=1}^{i-1} b_j f1^(j-i)
            sum_{lambda : lambda_1 + 2 lambda_2 + ... = i-j}
              M(j; lambda) f1^(-|lambda|) f2^lambda_1 f3^lambda_2 ...

where M(j; lambda) = j(j-1)...(j-|lambda|+1) / (lambda_1! lambda_2! ...)
is the falling-factorial multinomial coefficient (zero when |lambda| > j).
The inner partition sums are evaluated through the generating identity
sum_{|lambda|=l} M-terms = binom(j, l) * [z^d] g(z)^l with
g = sum_{k>=1} (f_{k+1}/f1) z^k, which is the same formula with the
lambda-sum grouped by |lambda|.

Coefficients may live in any exact commutative field supporting the
Python arithmetic operators (Fraction, Scalar, RatFunc).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import ZeroLinearTerm


def multinomial(k, lambdas) -> Fraction:
    """Falling-factorial multinomial k(k-1)...(k-|lambda|+1)/prod(l_i!).

    Symmetric under permutation of the lambdas; equals the ordinary
    multinomial k!/( (k-|lambda|)! prod l_i! ) for integer k >= |lambda|,
    and vanishes for integer k < |lambda|.
    """
    total = sum(lambdas)
    num = Fraction(1)
    kf = Fraction(k)
    for t in range(total):
        num *= kf - t
    den = 1
    for l in lambdas:
        den *= factorial(l)
    return num / den


def partitions_with_parts(d: int, max_part: int):
    """Multiplicity vectors (l_1, ..., l_d) with sum k*l_k = d, parts <= max_part."""
    max_part = min(max_part, d)

    def rec(remaining, part):
        if remaining == 0:
            yield {}
            return
        if part == 0:
            return
        for cnt in range(remaining // part, -1, -1):
            for rest in rec(remaining - cnt * part, part - 1):
                if cnt:
                    rest = dict(rest)
                    rest[part] = cnt
                yield rest

    for mult in rec(d, max_part):
        out = [0] * d
        for part, cnt in mult.items():
            out[part - 1] = cnt
        yield tuple(out)


@dataclass
class ReversionResult:
    """Coefficients of the formal inverse: coeffs[i] = b_i for 1 <= i <= N
    (coeffs[0] = 0 by convention), plus the source linear coefficient."""

    coeffs: list
    f1: object

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int):
        return self.coeffs[i]

    def evaluate(self, w):
        """sum_i b_i w^i for a numeric w (truncated partial sum)."""
        acc = None
        wp = w
        for i in range(1, len(self.coeffs)):
            t = self.coeffs[i] * wp
            acc = t if acc is None else acc + t
            wp = wp * w
        return acc


def _is_zero(c) -> bool:
    return not c


def formal_inverse(fcoeffs, N: int, check: bool = True) -> ReversionResult:
    """Invert F = sum_{i>=1} fcoeffs[i-1] z^i to order N.

    Raises ZeroLinearTerm when the linear coefficient vanishes.  With
    ``check`` the recomposition F(z(w)) = w + O(w^{N+1}) is verified
    exactly and an ArithmeticError is raised on failure (this should be
    impossible and exists to guard the recursion against regressions).
    """
    if not fcoeffs or _is_zero(fcoeffs[0]):
        raise ZeroLinearTerm("series has no invertible linear term")
    f = list(fcoeffs[:N])
    f1 = f[0]
    one = f1 / f1
    zero = f1 - f1
    inv_f1 = one / f1

    # g = sum_{k>=1} (f_{k+1}/f1) z^k, truncated at z^(N-1)
    g = [zero] * N  # g[k] = coefficient of z^k, index 0 unused
    top = 0
    for k in range(1, N):
        if k < len(f) and not _is_zero(f[k]):
            g[k] = f[k] * inv_f1
            top = k

    # gpow[l][d] = [z^d] g^l for 1 <= l <= d <= N-1
    gpow = [None, g]
    maxd = N - 1
    for l in range(2, maxd + 1):
        prev = gpow[-1]
        cur = [zero] * (maxd + 1)
        for d1 in range(l - 1, maxd):
            a = prev[d1]
            if _is_zero(a):
                continue
            for d2 in range(1, min(top, maxd - d1) + 1):
                b = g[d2]
                if not _is_zero(b):
                    cur[d1 + d2] = cur[d1 + d2] + a * b
        gpow.append(cur)

    inv_f1_pows = [one]
    for _ in range(N):
        inv_f1_pows.append(inv_f1_pows[-1] * inv_f1)

    bs = [zero, inv_f1]
    for i in range(2, N + 1):
        acc = zero
        for j in range(1, i):
            d = i - j
            inner = zero
            hit = False
            for l in range(1, min(j, d) + 1):
                gv = gpow[l][d] if d <= maxd else zero
                if _is_zero(gv):
                    continue
                inner = inner + gv * Fraction(comb(j, l))
                hit = True
            if hit:
                acc = acc + bs[j] * inv_f1_pows[i - j] * inner
        bs.append(-acc)

    result = ReversionResult(coeffs=bs, f1=f1)
    if check:
        _verify_composition(f, bs, N, zero, one)
    return result


def _verify_composition(f, bs, N, zero, one):
    """Exact check that F(z(w)) == w to order N."""
    # z(w) as a truncated list, index = power of w
    z = [zero] + bs[1:]
    comp = [zero] * (N + 1)
    for k in range(len(f), 0, -1):
        # comp = comp * z + f[k-1] * z  ... Horner: ((f_K z + f_{K-1}) z + ...) z
        comp = _trunc_mul(comp, z, N)
        if not _is_zero(f[k - 1]):
            for d in range(N + 1):
                if not _is_zero(z[d] if d < len(z) else zero):
                    comp[d] = comp[d] + f[k - 1] * z[d]
    ok = not any(not _is_zero(comp[d]) for d in range(2, N + 1))
    ok = ok and not _is_zero(comp[1]) and _is_zero(comp[1] - one)
    if not ok:
        raise ArithmeticError("reversion recursion failed its composition check")


def _trunc_mul(a, b, N):
    out = [a[0] - a[0] if a else b[0] - b[0]] * (N + 1)
    for i, ai in enumerate(a):
        if i > N or _is_zero(ai):
            continue
        for j, bj in enumerate(b):
            if i + j > N:
                break
            if not _is_zero(bj):
                out[i + j] = out[i + j] + ai * bj
    return out


def formal_inverse_of_yseries(P, N: int, check: bool = True) -> ReversionResult:
    """Reversion of a YSeries with leading exponent 1 (z = y)."""
    from .ratfunc import RF_ZERO

    if P.is_zero() or P.alpha != 1:
        raise ZeroLinearTerm("series must start at exponent 1")
    f = [P.rel_coeff(i) for i in range(N)]
    if P.prec is not None and P.prec - 1 < N:
        raise ValueError(f"series known only to O(y^{P.prec}), need {N} coefficients")
    f = [c if not c.is_zero() else RF_ZERO for c in f]
    return formal_inverse(f, N, check=check)
