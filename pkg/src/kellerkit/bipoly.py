"""Sparse bivariate polynomials over exact Gaussian rationals.

``BiPoly`` stores a map from exponent pairs ``(i, j)`` (for ``x^i y^j``,
both nonnegative) to nonzero ``Scalar`` coefficients.  Canonical form
never stores zero coefficients, so equality is term-map equality.
``PolyMap`` bundles a pair ``(F, G)`` with its cached Jacobian
determinant.
"""

from __future__ import annotations

from typing import Iterable, Mapping

import numpy as np

from .scalars import Scalar, ZERO, ONE

Point = tuple


class BiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | Iterable | None = None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for (i, j), c in items:
                c = Scalar.coerce(c)
                if c:
                    i, j = int(i), int(j)
                    if i < 0 or j < 0:
                        raise ValueError("BiPoly exponents must be nonnegative")
                    key = (i, j)
                    prev = clean.get(key)
                    c = prev + c if prev is not None else c
                    if c:
                        clean[key] = c
                    elif prev is not None:
                        del clean[key]
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    # ------------------------------------------------------------ builders
    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        return cls({(0, 0): Scalar.coerce(c)})

    @classmethod
    def x(cls):
        return cls({(1, 0): ONE})

    @classmethod
    def y(cls):
        return cls({(0, 1): ONE})

    # ------------------------------------------------------------- queries
    def support(self) -> set:
        """Exponent pairs with nonzero coefficient."""
        return set(self.terms)

    def coeff(self, i: int, j: int) -> Scalar:
        return self.terms.get((i, j), ZERO)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self.terms)

    def constant_value(self) -> Scalar:
        return self.coeff(0, 0)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        """Graded-lex order: by total degree, then x-exponent."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]))

    # ---------------------------------------------------------- arithmetic
    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return _raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return _raw({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)) or not isinstance(other, BiPoly):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                c = c1 * c2
                s = out.get(k)
                s = c if s is None else s + c
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return _raw(out)

    __rmul__ = __mul__

    def scale(self, c) -> "BiPoly":
        c = Scalar.coerce(c)
        if not c:
            return BiPoly.zero()
        return _raw({k: v * c for k, v in self.terms.items()})

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a BiPoly")
        out = BiPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def diff_x(self) -> "BiPoly":
        return _raw({(i - 1, j): c * i for (i, j), c in self.terms.items() if i})

    def diff_y(self) -> "BiPoly":
        return _raw({(i, j - 1): c * j for (i, j), c in self.terms.items() if j})

    # -------------------------------------------------------- substitution
    def substitute(self, X: "BiPoly", Y: "BiPoly") -> "BiPoly":
        """Exact expansion of ``P(X(x,y), Y(x,y))``."""
        if not self.terms:
            return BiPoly.zero()
        max_i = max(i for i, _ in self.terms)
        max_j = max(j for _, j in self.terms)
        xp = _power_table(X, max_i)
        yp = _power_table(Y, max_j)
        out = BiPoly.zero()
        for (i, j), c in self.sorted_terms():
            out = out + (xp[i] * yp[j]).scale(c)
        return out

    def shift(self, a, b) -> "BiPoly":
        """P(a + x, b + y), exact."""
        return self.substitute(BiPoly.const(a) + BiPoly.x(), BiPoly.const(b) + BiPoly.y())

    # ---------------------------------------------------------- evaluation
    def eval_exact(self, px, py) -> Scalar:
        px, py = Scalar.coerce(px), Scalar.coerce(py)
        if not self.terms:
            return ZERO
        max_i = max(i for i, _ in self.terms)
        max_j = max(j for _, j in self.terms)
        xs = _scalar_powers(px, max_i)
        ys = _scalar_powers(py, max_j)
        acc = ZERO
        for (i, j), c in self.sorted_terms():
            acc = acc + c * xs[i] * ys[j]
        return acc

    def eval_float(self, px: complex, py: complex) -> complex:
        acc = 0j
        for (i, j), c in self.terms.items():
            acc += complex(c) * (px ** i) * (py ** j)
        return acc

    def eval_array(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """Vectorized float evaluation on matching-shape complex arrays."""
        out = np.zeros(np.broadcast(xs, ys).shape, dtype=complex)
        for (i, j), c in self.terms.items():
            out += complex(c) * (xs ** i) * (ys ** j)
        return out

    def __repr__(self):
        if not self.terms:
            return "BiPoly(0)"
        bits = []
        for (i, j), c in self.sorted_terms():
            mono = "".join(
                (f"x^{i}" if i > 1 else "x" if i == 1 else "",
                 f"y^{j}" if j > 1 else "y" if j == 1 else ""))
            bits.append(f"({c}){mono}" if mono else f"({c})")
        return "BiPoly(" + " + ".join(bits) + ")"


def _raw(terms: dict) -> BiPoly:
    p = BiPoly.__new__(BiPoly)
    object.__setattr__(p, "terms", terms)
    return p


def _coerce(v):
    if isinstance(v, BiPoly):
        return v
    try:
        return BiPoly.const(Scalar.coerce(v))
    except TypeError:
        return None


def _power_table(p: BiPoly, n: int):
    out = [BiPoly.const(1)]
    for _ in range(n):
        out.append(out[-1] * p)
    return out


def _scalar_powers(s: Scalar, n: int):
    out = [ONE]
    for _ in range(n):
        out.append(out[-1] * s)
    return out


def jacobian_det(F: BiPoly, G: BiPoly) -> BiPoly:
    """F_x*G_y - F_y*G_x, exact."""
    return F.diff_x() * G.diff_y() - F.diff_y() * G.diff_x()


def substitute_map(P: BiPoly, X: BiPoly, Y: BiPoly) -> BiPoly:
    return P.substitute(X, Y)


class PolyMap:
    """A pair (F, G) with its cached Jacobian determinant."""

    __slots__ = ("F", "G", "_jac")

    def __init__(self, F: BiPoly, G: BiPoly):
        object.__setattr__(self, "F", F)
        object.__setattr__(self, "G", G)
        object.__setattr__(self, "_jac", None)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMap is immutable")

    @property
    def jac(self) -> BiPoly:
        if self._jac is None:
            object.__setattr__(self, "_jac", jacobian_det(self.F, self.G))
        return self._jac

    def __eq__(self, other):
        if not isinstance(other, PolyMap):
            return NotImplemented
        return self.F == other.F and self.G == other.G

    def __call__(self, p):
        return eval_map(self, p)

    def eval_float(self, p) -> tuple:
        x, y = complex(p[0]), complex(p[1])
        return (self.F.eval_float(x, y), self.G.eval_float(x, y))

    def __repr__(self):
        return f"PolyMap(F={self.F!r}, G={self.G!r})"


def eval_map(M: PolyMap, p) -> tuple:
    """(F(p), G(p)); exact when the coordinates are exact Scalars."""
    x, y = p
    if isinstance(x, (complex, float)) or isinstance(y, (complex, float)):
        return M.eval_float(p)
    return (M.F.eval_exact(x, y), M.G.eval_exact(x, y))
