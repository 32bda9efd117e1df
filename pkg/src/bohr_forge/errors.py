"""Shared exception types."""


class BohrForgeError(Exception):
    """Base class for all library errors."""


class DomainError(BohrForgeError, ValueError):
    """Input outside the mathematical domain of an operation."""


class DimensionError(BohrForgeError, ValueError):
    """Mismatched variable counts or vector lengths."""


class ConfigError(BohrForgeError, ValueError):
    """Invalid parameter combination, e.g. a Hadamard size that is not a power of two."""


class FrequencyOverflowError(BohrForgeError, OverflowError):
    """A Dirichlet frequency would exceed the 64-bit bound."""


class ResourceBudgetError(BohrForgeError, RuntimeError):
    """An explicit size or budget cap was exceeded."""
