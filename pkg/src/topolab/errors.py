"""Exception types shared across the workbench."""


class TopolabError(Exception):
    """Base class for all workbench errors."""


class InvalidInput(TopolabError):
    """Malformed or non-canonical input data."""


class BoundExceeded(TopolabError):
    """A requested enumeration is outside the supported size bounds."""


class NotOpen(TopolabError):
    """A mask that was required to be an open set is not one."""


class FilterNotWellFormed(TopolabError):
    """A constructed filter violates its structural invariants.

    This signals an internal inconsistency; for the shipped constructions
    it must never fire.
    """


class NotWellDefined(TopolabError):
    """A factorization through a quotient is not constant on some fiber."""


class NotStablyCompact(TopolabError):
    """The operation requires a stably compact space."""


class NoSplitting(TopolabError):
    """No continuous left inverse exists where the construction needs one."""


class HypothesisViolated(TopolabError):
    """A stated precondition of a construction fails on the given data."""


class UnknownSuite(TopolabError):
    """Requested check suite id is not registered."""


class UnknownFault(TopolabError):
    """Requested fault-injection id is not registered."""


class CoreflectionMismatch(TopolabError):
    """The two regular-coreflection algorithms disagree on a frame."""
