"""Exception types shared across the package."""


class EllstabError(ValueError):
    """Base class for all domain errors raised by this package."""


class DimensionError(EllstabError):
    """Vector or matrix data does not match the lattice rank."""


class ConfigurationError(EllstabError):
    """Geometry or curve data violates a constructor invariant."""


class DomainError(EllstabError):
    """An operation was called on data outside its domain."""


class CurveDomainError(DomainError):
    """No admissible root of a constraint curve exists for the given input."""


class ComputationFault(EllstabError):
    """Two independent evaluation paths disagreed; indicates a coding bug."""
