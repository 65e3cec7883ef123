"""Exception hierarchy shared by every module."""


class MatroidError(Exception):
    """Base class for all errors raised by this package."""


class SizeExceeded(MatroidError):
    """Ground set too large for the requested operation."""


class InvalidSpec(MatroidError):
    """A matroid description does not define a valid matroid."""


class OverlappingSets(MatroidError):
    """Contracted and deleted sets of a minor intersect."""


class NotABasis(MatroidError):
    pass


class InvalidOrdering(MatroidError):
    """An element ordering is not a permutation of the ground set."""


class DecompositionNotUnique(MatroidError):
    """Zero or several splits of a basis passed the activity test."""


class ActivityTransferViolation(MatroidError):
    """Activities of a basis differ from those of its two parts."""


class UnboundVariable(MatroidError, KeyError):
    pass
