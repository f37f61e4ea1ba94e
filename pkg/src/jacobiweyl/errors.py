"""Exception hierarchy shared by all modules."""


class JacobiWeylError(Exception):
    """Base class for all library errors."""


class ZeroOffDiagonal(JacobiWeylError):
    """Some off-diagonal coefficient a_n (or the boundary a0) is zero."""


class LengthMismatch(JacobiWeylError):
    """Coefficient lists a and b have different lengths."""


class NonFiniteEntry(JacobiWeylError):
    """A coefficient contains NaN or Inf."""


class InsufficientCoefficients(JacobiWeylError):
    """A computation needs coefficients beyond the stored range and the
    tail rule is 'none'."""


class IndexOutOfRange(JacobiWeylError):
    """Requested index lies outside the stored solution range."""


class MismatchedLambda(JacobiWeylError):
    """Two recursion solutions carry different spectral parameters."""


class SingularWronskian(JacobiWeylError):
    """W(p, phi+) vanished: lambda is an eigenvalue of the finite block."""


class PoleAtLambda(JacobiWeylError):
    """phi+_0 vanished: the Weyl function has a pole at this lambda."""


class NoDecayDetected(JacobiWeylError):
    """Nested truncations disagree: no l2 solution detected at this lambda
    (likely near the essential spectrum)."""


class DegenerateSpectrum(JacobiWeylError):
    """Repeated or zero singular values: the measure construction assumes
    distinct nonzero coneigenvalues."""


class ZeroFirstComponent(JacobiWeylError):
    """A coneigenvector has (numerically) vanishing first component."""


class ZeroArgument(JacobiWeylError):
    """z = 0 passed where z + 1/z must be evaluated."""


class QuadratureNotConverged(JacobiWeylError):
    """Doubling the quadrature nodes changed the result beyond tolerance."""


class OutsideRegionD(JacobiWeylError):
    """|z(lambda)| >= 1/(3B+1): the response series is not certified to
    converge at this lambda."""
