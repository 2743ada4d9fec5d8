"""Exception and warning types shared across the library.

Every validation failure raises a subclass of :class:`AlgebraError`, so the
command-line layer can map the whole family to one exit code.  The oracle
limitation :class:`NonSplitSupportError` is kept separate because callers may
want to retry over a field extension instead of giving up.
"""


class AlgebraError(ValueError):
    """Base class for all validation errors raised by this library."""


# --- finite fields ---

class CompositeModulusError(AlgebraError):
    """The characteristic passed to a field constructor is not prime."""


class ReducibleModulusError(AlgebraError):
    """A supplied extension modulus factors over the prime field."""


class FieldMismatchError(AlgebraError):
    """Operands belong to different ambient fields."""


class FieldTooLargeError(AlgebraError):
    """An exhaustive scan was requested over a field beyond desk scale."""


# --- polynomials ---

class DuplicateAbscissaError(AlgebraError):
    """Interpolation data contains two nodes with the same x-coordinate."""


# --- curves ---

class EvenDegreeError(AlgebraError):
    """The defining polynomial has even degree (not an imaginary model)."""


class NonMonicError(AlgebraError):
    """The defining polynomial is not monic."""


class SingularCurveError(AlgebraError):
    """The equation defines a singular curve."""


class MissingHInChar2Error(AlgebraError):
    """Characteristic 2 requires a nonzero cross term h(x)."""


class Char2NotNormalizableError(AlgebraError):
    """The cross term h(x) cannot be removed in characteristic 2."""


class PointNotOnCurveError(AlgebraError):
    """A point fails the curve equation."""


# --- function field ---

class ZeroFunctionError(AlgebraError):
    """Requested a valuation or divisor of the zero function."""


class NonSplitSupportError(AlgebraError):
    """Support does not split over the working field (or permitted extension).

    The offending irreducible factor is stored in ``factor``.
    """

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


# --- divisors ---

class DivisibilityFailureError(AlgebraError):
    """u(x) does not divide v^2 + v*h - f."""


class NonMonicUError(AlgebraError):
    """The u-polynomial of a Mumford pair must be monic."""


class DegreeViolationError(AlgebraError):
    """A degree constraint (deg v < deg u, deg h <= g, ...) fails."""


class OppositePointsError(AlgebraError):
    """A point list contains a point together with its opposite."""


class WeierstrassMultiplicityError(AlgebraError):
    """A Weierstrass point was given multiplicity greater than one."""


class AlreadyReducedError(AlgebraError):
    """A reduction step was requested on an already reduced divisor."""


# --- Riemann-Roch ---

class NegativeMError(AlgebraError):
    """The infinity multiple m must be nonnegative."""


class NonPositiveMError(AlgebraError):
    """Basis construction needs a divisor of positive degree."""


# --- codes ---

class WrongPointCountError(AlgebraError):
    """Curve fitting needs exactly 2g + 2 - t interpolation points."""


class UOnSupportError(AlgebraError):
    """An evaluation point lies over a root of u(x)."""


class NonMonicModelError(AlgebraError):
    """The fitted equation is not monic; perturb the free points."""


class KOutOfRangeError(AlgebraError):
    """The requested code dimension is out of range."""


class LengthMismatchError(AlgebraError):
    """A message does not match the code dimension."""


class TooManyMinorsError(AlgebraError):
    """The minor count exceeds the exhaustive-check budget."""


class SearchSpaceTooLargeError(AlgebraError):
    """The codeword space exceeds the brute-force budget."""


class DuplicateEvaluationWarning(UserWarning):
    """Distinct basis functions (or points) produce identical evaluations."""
