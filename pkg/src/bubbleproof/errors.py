"""Exception hierarchy shared by all modules."""


class BubbleProofError(Exception):
    """Base class for all package errors."""


class DomainError(BubbleProofError):
    """An argument left the mathematical domain of a function
    (e.g. acoth on [-1, 1], sqrt of a negative enclosure)."""


class DegenerateConfig(BubbleProofError):
    """A requested double-bubble configuration does not close up."""


class NoConvergence(BubbleProofError):
    """A solver exhausted its iteration budget."""


class InfeasibleBand(BubbleProofError):
    """A volume band is narrower than the error slack allows."""


class InfeasibleTarget(BubbleProofError):
    """A target volume is outside the solvable range of the requested mode."""


class RegionViolation(BubbleProofError):
    """A bound was requested outside its valid monotonicity region."""


class StepFailure(BubbleProofError):
    """A curvature-pair step could not land inside the required box."""


class CurvatureUnderflow(BubbleProofError):
    """A candidate curvature parameter fell to 1 or below."""


class DepthExceeded(BubbleProofError):
    """Subdivision recursion exceeded its depth budget."""


class Uncovered(BubbleProofError):
    """No reduction chain covers the given volume configuration."""


class CertificateError(BubbleProofError):
    """A certificate file is malformed or fails re-verification."""
