"""Exception types shared across the package."""


class BiaError(Exception):
    """Base class for all package-specific errors."""


class DegenerateSchemeError(BiaError):
    """Raised for user counts where the construction degenerates (K < 3)."""


class ConstructionFailedError(BiaError):
    """Raised when no candidate pattern matrix passes rank verification.

    Unreachable for the built-in candidate enumeration (the fallback family
    always satisfies the product rank certificate); kept as a safety net for
    callers that restrict the candidate set.
    """


class UnverifiableDrawError(BiaError):
    """Raised by the zero-forcing decoder when the combined receive matrix is
    rank deficient, so the desired symbols cannot all be separated from
    interference for this draw."""
