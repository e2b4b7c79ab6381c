"""Exception types shared across the package."""


class GlmDesignError(Exception):
    """Base class for all glmdesign errors."""


class NotPositiveDefinite(GlmDesignError):
    """A matrix that must be symmetric positive definite is not.

    Raised when a Cholesky pivot falls at or below the SPD tolerance, or when
    a fractional matrix power meets a non-positive eigenvalue.  For design
    work this signals a singular or deficient information matrix.
    """


class NumericOverflow(GlmDesignError):
    """An intermediate quantity left the representable floating-point range."""


class NonPositiveCriterion(GlmDesignError):
    """A criterion value that must be positive (for efficiency ratios) is not.

    Typically the log-determinant convention at p = 0 producing a value <= 0;
    switch to the root-determinant convention or rescale the problem.
    """


class SingularStart(GlmDesignError):
    """The starting support yields a singular information matrix for a model."""


class PoolTooLarge(GlmDesignError):
    """A requested candidate pool exceeds the configured size cap."""


class UnsupportedDimension(GlmDesignError):
    """Requested dimension exceeds the embedded low-discrepancy tables."""


class ConfigError(GlmDesignError):
    """A solve configuration failed validation.

    ``field`` names the offending entry (dotted path) when known.
    """

    def __init__(self, message: str, field: str | None = None):
        self.field = field
        if field is not None:
            message = f"{field}: {message}"
        super().__init__(message)
