"""Exception types shared across the library."""


class ShrinksetError(Exception):
    """Base class for all library errors."""


class EmptySetError(ShrinksetError):
    """Operation requires a nonempty set."""


class NonpositiveAreaError(ShrinksetError):
    """Requested area must be strictly positive."""


class AreaExceedsDomainError(ShrinksetError):
    """Requested area exceeds the area of the containing set."""


class OutOfRegimeError(ShrinksetError):
    """Parameter falls outside the regime where the operation is defined."""


class OutOfRangeError(ShrinksetError):
    """Query time lies outside the simulated range."""


class BadConfigError(ShrinksetError):
    """Invalid simulation or solver configuration."""


class NotCriticalError(ShrinksetError):
    """Trajectory is not near the critical budget."""


class DegenerateDomainError(ShrinksetError):
    """Domain is too degenerate for the requested computation."""
