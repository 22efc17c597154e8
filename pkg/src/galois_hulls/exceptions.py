"""Exception types raised across the package."""


class FieldError(ValueError):
    """Invalid field parameters or mixed-field arithmetic."""


class NoRootError(FieldError):
    """The requested d-th root does not exist."""


class InstanceTooLarge(ValueError):
    """An exhaustive computation exceeds its configured size limit."""


class HypothesisError(ValueError):
    """A construction was called outside the hypotheses that make it valid."""


class NotSelfOrthogonal(HypothesisError):
    """A seed code is not self-orthogonal for the requested Galois parameter."""
