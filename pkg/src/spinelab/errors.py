"""Exception types shared across the package."""


class SpinelabError(Exception):
    """Base class for all spinelab errors."""


class NonPositiveSideError(SpinelabError, ValueError):
    """A hexagon side length was zero or negative."""


class NotHyperbolicError(SpinelabError, ValueError):
    """The requested polygon has non-positive hyperbolic area."""


class InvalidGenusError(SpinelabError, ValueError):
    """Genus below 2 has no hyperbolic structure."""


class DegenerateMinimumError(SpinelabError, RuntimeError):
    """The length minimizer collapses an edge, so the graph is not a spine."""


class CapTooSmallError(SpinelabError, ValueError):
    """The coefficient bound provably misses candidates below the length cap."""
