"""Exception types shared across the package.

Every predicate failure that callers are expected to handle gets its own
class; plain bugs raise ValueError/AssertionError as usual.
"""


class GeometryError(Exception):
    """Base class for all domain errors raised by this package."""


class ZeroInputError(GeometryError):
    """An all-zero tuple was passed where a projective point is required."""


class BoundaryPointError(GeometryError):
    """Kinematic action requested at a point with vanishing primal norm."""


class NotThroughIdentityError(GeometryError):
    """Line classification requires the identity displacement on the line."""


class ZeroDirectionError(GeometryError):
    """Axis direction must be nonzero."""


class CenterOfProjectionError(GeometryError):
    """Stereographic projection is undefined at its center."""


class CenterChartError(GeometryError):
    """Operation needs a point with nonzero leading coordinate."""


class CollinearWitnessesError(GeometryError):
    """Three witness points do not span a 2-plane."""


class ReducibleSectionError(GeometryError):
    """The plane section splits into lines; not a circle."""


class BaseLocusError(GeometryError):
    """Orbit map evaluated on its undefined locus."""


class BaseLocusOnLineError(GeometryError):
    """Every sample of a line fell on the orbit map's undefined locus."""


class DegenerateMotionError(GeometryError):
    """Bilinear motion whose orbit coordinates vanish identically."""


class BasepointError(GeometryError):
    """All five biquadratic coordinates vanish at the given parameters."""


class NotACyclideError(GeometryError):
    """Quadric pencil through the sampled image has dimension != 2."""


class IndeterminateCountError(GeometryError):
    """Probe pairs disagreed on a generic intersection count."""


class DegenerateCircleError(GeometryError):
    """A point orbit cannot be lifted to a unique line."""


class DegenerateConfigurationError(GeometryError):
    """Constructed lines fail to span a 3-space (or a locator was ambiguous)."""


class NotDoublyRuledError(GeometryError):
    """Quadric form is not rank 4 of signature (2,2)."""


class OrbitMismatchError(GeometryError):
    """Mapped samples of the reconstructed quadric left the target surface."""


class NoConvergenceError(GeometryError):
    """Numerical factorization failed within the restart budget."""

    def __init__(self, message, best_residual=None):
        super().__init__(message)
        self.best_residual = best_residual


class StudyViolationError(GeometryError):
    """Rebuilt motion does not satisfy the Study condition identically."""
