"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of an operation."""


class ComputationIntegrityError(RuntimeError):
    """Two independent algorithms for the same quantity disagreed.

    This always signals a bug, never bad input.
    """


class ConvergenceError(RuntimeError):
    """A series summation exceeded its iteration cap before its tail
    bound dropped below the requested tolerance."""


class ConfigError(ValueError):
    """A CLI configuration file or flag is malformed."""
