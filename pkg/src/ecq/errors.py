"""Exception types shared across the package.

The CLI maps these onto its stable exit codes, so new failure modes should
reuse an existing class (or subclass one) rather than raising bare ValueError
from command paths.
"""


class EcqError(Exception):
    """Base class for all package-specific errors."""


class ParseError(EcqError):
    """Malformed curve, point or rational text."""


class ModelError(EcqError):
    """The supplied curve model is unusable for the requested operation."""


class SingularCurveError(ModelError):
    """Discriminant vanishes; not an elliptic curve."""


class NonIntegralModelError(ModelError):
    """An integral short model y^2 = x^3 + Ax + B with A, B in Z is required."""


class PointNotOnCurveError(EcqError):
    """A point handed to a curve operation does not satisfy the equation."""


class DenominatorVanishesError(EcqError):
    """Duplication denominator is zero at this abscissa (2-torsion)."""


class RootsDoNotMatchError(EcqError):
    """Claimed roots do not reproduce the polynomial's coefficients."""


class CommonZeroError(EcqError):
    """All coordinate forms of a projective map vanish at the point."""


class IdentityFailureError(EcqError):
    """An exact polynomial identity that must hold by construction failed."""


class NonContractionError(EcqError):
    """Descent heights fail to contract (bad constants or a broken oracle)."""
