"""Exception types raised across the package."""


class AlphaProdError(Exception):
    """Base class for every error raised by this package."""


class PartitionError(AlphaProdError, ValueError):
    """A graph's declared bipartition is malformed."""


class PreconditionError(AlphaProdError, ValueError):
    """An operation was called on input outside its domain."""


class AssignmentError(PreconditionError):
    """An edge assignment h is partial or points outside the family."""


class HypothesisError(PreconditionError):
    """An input violates a hypothesis of a labeling-transfer construction."""


class FamilyError(AlphaProdError, ValueError):
    """A family specification or family object is inconsistent."""


class SearchBoundError(AlphaProdError):
    """Exhaustive search refused because the graph is too large."""


class CertificationError(AlphaProdError):
    """A construction produced an object its validator rejects."""


class DecompositionError(AlphaProdError):
    """A decomposition could not be built."""


class ParseError(AlphaProdError, ValueError):
    """Malformed text input. ``lineno`` is 1-based, or None for whole-file errors."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
