"""Exception types shared across the workbench."""

from __future__ import annotations


class WorkbenchError(Exception):
    """Base class for all errors raised by user input or misuse of the API."""


class ParseError(WorkbenchError):
    """Malformed formula text. Carries the 0-based character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownLabelError(WorkbenchError):
    """Corpus lookup with a label that does not exist."""


class UnboundMetavariableError(WorkbenchError):
    """Law instantiation with a binding that misses a metavariable."""


class MissingAtomError(WorkbenchError):
    """Evaluation against an assignment or distribution lacking an atom."""


class AtomLimitError(WorkbenchError):
    """Exhaustive enumeration refused: too many atoms for the operation."""


class UnsupportedConnectiveError(WorkbenchError):
    """Operation undefined for a connective (vector denotation of not/xor,
    duality of xor)."""


class ZeroProbabilityError(WorkbenchError):
    """Conditioning on an event of probability zero, or a likelihood ratio
    against a hypothesis of probability 0 or 1."""


class SizeLimitError(WorkbenchError):
    """Grid or search parameters outside the supported exhaustive range."""
