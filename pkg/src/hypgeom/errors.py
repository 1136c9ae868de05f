"""Exception types shared across the library."""


class HypgeomError(Exception):
    """Base class for library errors."""


class OutsideDomainError(HypgeomError):
    """A point lies outside the domain it was evaluated in."""


class ConvergenceError(HypgeomError):
    """An iterative procedure failed to converge within its iteration cap."""


class DegenerateSetError(HypgeomError):
    """A point set is too small or has zero diameter for the requested functional."""
