"""Exception hierarchy shared by all kellerkit modules."""


class KellerkitError(Exception):
    """Base class for all errors raised by this package."""


class BranchError(KellerkitError):
    """Fractional power of a series whose leading coefficient is not 1."""


class ExponentError(KellerkitError):
    """Requested power would produce a non-integer exponent of y."""


class ExponentRangeError(KellerkitError):
    """Exponent outside the hypotheses of the dominance power rules."""


class IllDefinedError(KellerkitError):
    """Series substitution is not determined to the requested order."""


class PoleAtX0(KellerkitError):
    """A coefficient denominator vanishes at the evaluation point."""


class ZeroLinearTerm(KellerkitError):
    """Series reversion requires a nonzero linear coefficient."""


class ZeroLeadingCoefficient(KellerkitError):
    """Operation requires a nonzero leading coefficient."""


class MixedShapeError(KellerkitError):
    """Operands must both be power series or both polynomials in 1/y."""


class NegativeDiscriminant(KellerkitError):
    """Closed-form inverse evaluated outside its convergence disk."""


class UncertifiedTail(KellerkitError):
    """A tail certificate is required but missing or inapplicable."""


class NotKellerError(KellerkitError):
    """The map does not have constant nonzero Jacobian determinant."""


class NoValidEll(KellerkitError):
    """No exponent in the searched range normalizes the pair."""


class DegeneratePair(KellerkitError):
    """Point pair violates the preconditions of the coordinate transform."""


class NoBeta2(KellerkitError):
    """No admissible shear coefficient keeps u1 away from zero on [0,1]."""


class NewtonDivergence(KellerkitError):
    """Newton iteration failed to reach the requested tolerance."""


class QuadratureUnstable(KellerkitError):
    """Integrand values vary beyond the sanity bound across nodes."""


class NoStepFound(KellerkitError):
    """Every perturbation ansatz was exhausted without a feasible step."""


class StylePrecondition(KellerkitError):
    """Recentering style requires nonzero coordinates that are zero."""


class TangencyNotMet(KellerkitError):
    """The frame does not satisfy the tangency condition; the step is
    solvable directly and the second-order coefficient is not needed."""
