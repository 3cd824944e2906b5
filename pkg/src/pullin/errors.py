"""Exception types shared across the library."""


class PullInError(Exception):
    """Base class for all library-specific failures."""


class DomainValidationError(PullInError, ValueError):
    """An argument violated a documented precondition."""


class NoCrossingError(PullInError, RuntimeError):
    """A shot profile never crossed zero inside the integration window."""


class BracketError(PullInError, RuntimeError):
    """A root or eigenvalue bracket could not be established."""


class BeyondPullInError(PullInError, ValueError):
    """A voltage at or beyond the pull-in voltage was requested."""


class QuadratureError(PullInError, RuntimeError):
    """An adaptive quadrature did not converge to the requested tolerance."""
