"""Canonical form for Jacobian pairs.

A Keller pair (F, G) is brought to the form where the support of F lies
in the triangle with vertices (0,0), (m,0), (0,m), the leading part of F
is exactly (x+y)^m, and J(F, G) = 1.  The variable change used is
(x, y) -> (x + (x+y)^ell, x+y), which has Jacobian determinant 1,
followed by the one-degree-of-freedom rescaling F -> F/s, G -> s*G/c.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bipoly import BiPoly, PolyMap, jacobian_det
from .errors import NotKellerError, NoValidEll
from .scalars import Scalar, ONE


@dataclass(frozen=True)
class KellerVerdict:
    keller: bool
    jacobian_constant: Scalar | None = None
    witness_monomial: tuple | None = None  # ((i, j), coefficient)

    def __bool__(self):
        return self.keller


@dataclass(frozen=True)
class NormalizedPair:
    """A normalized Keller pair with its certificate.

    ``ell == 0`` means the input already satisfied all three conditions
    and no variable change was applied.  ``certificate`` holds the three
    booleans (support in triangle, leading part (x+y)^m, J == 1).
    """

    map: PolyMap
    m: int
    ell: int
    scale: Scalar
    certificate: dict

    @property
    def xi(self):
        return (self.m, 0)

    @property
    def eta(self):
        return (0, self.m)


def is_keller(M: PolyMap) -> KellerVerdict:
    """Constant-Jacobian test; returns the constant or a witness monomial."""
    J = M.jac
    if J.is_constant():
        c = J.constant_value()
        if c:
            return KellerVerdict(True, jacobian_constant=c)
        return KellerVerdict(False, witness_monomial=((0, 0), c))
    key = max((k for k in J.terms if k != (0, 0)), key=lambda k: (k[0] + k[1], k[0]))
    return KellerVerdict(False, witness_monomial=(key, J.terms[key]))


def leading_part(F: BiPoly) -> BiPoly:
    """Terms of F on the top edge joining (d, 0) and (0, d), i.e. the
    top-degree homogeneous form (restricted to the support)."""
    if F.is_zero():
        raise ValueError("leading part of the zero polynomial")
    d = F.degree()
    return BiPoly({k: c for k, c in F.terms.items() if k[0] + k[1] == d})


def _binomial_power(ell: int) -> BiPoly:
    return (BiPoly.x() + BiPoly.y()) ** ell


def certificate_conditions(M: PolyMap) -> dict:
    """The three normalization conditions, evaluated exactly."""
    F = M.F
    m = F.degree()
    in_triangle = m >= 1 and all(i + j <= m for i, j in F.terms)
    lead_ok = m >= 1 and leading_part(F) == _binomial_power(m) if not F.is_zero() else False
    jac_one = M.jac == BiPoly.const(1)
    return {
        "support_in_triangle": bool(in_triangle),
        "leading_part_binomial": bool(lead_ok),
        "jacobian_one": bool(jac_one),
    }


def is_normalized(M: PolyMap) -> bool:
    return all(certificate_conditions(M).values())


def normalize_keller(M: PolyMap) -> NormalizedPair:
    """Normalize a Keller pair by the smallest admissible exponent ell.

    Searches ell with max(2, deg F + 1) <= ell <= deg F + deg G + 2 and
    accepts the first one whose rescaled image satisfies all three
    conditions.  Already-normalized input is returned unchanged with
    ell = 0 (idempotence).
    """
    verdict = is_keller(M)
    if not verdict:
        raise NotKellerError(f"not a Keller map: Jacobian has monomial {verdict.witness_monomial}")
    c = verdict.jacobian_constant

    cert = certificate_conditions(M)
    if all(cert.values()):
        return NormalizedPair(map=M, m=M.F.degree(), ell=0, scale=ONE, certificate=cert)

    dF, dG = max(M.F.degree(), 0), max(M.G.degree(), 0)
    lo, hi = max(2, dF + 1), dF + dG + 2
    for ell in range(lo, hi + 1):
        X = BiPoly.x() + _binomial_power(ell)
        Y = BiPoly.x() + BiPoly.y()
        Fs = M.F.substitute(X, Y)
        Gs = M.G.substitute(X, Y)
        m = Fs.degree()
        if m < 1:
            continue
        top = leading_part(Fs)
        target = _binomial_power(m)
        gamma = top.coeff(m, 0)
        if not gamma or top != target.scale(gamma):
            continue
        Fn = Fs.scale(gamma.inverse())
        Gn = Gs.scale(gamma / c)
        out = PolyMap(Fn, Gn)
        cert = certificate_conditions(out)
        if all(cert.values()):
            return NormalizedPair(map=out, m=m, ell=ell, scale=gamma, certificate=cert)
    raise NoValidEll(f"no valid ell in [{lo}, {hi}] normalizes the pair")
