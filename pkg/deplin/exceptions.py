"""Custom exceptions for deplin."""
from pathlib import Path


class DeplinError(Exception):
    """Base exception for all deplin errors."""

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(message)


class ParseError(DeplinError):
    """Raised when textual input cannot be parsed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None) -> None:
        self.line = line
        self.column = column
        if line is not None:
            full_message = f"{message} (line {line}"
            if column is not None:
                full_message += f", column {column}"
            full_message += ")"
            super().__init__(full_message)
        else:
            super().__init__(message)
        self.reason = message

    def at_line(self, line: int) -> "ParseError":
        """Return a copy of this error located at ``line``."""
        return type(self)(self.reason, line=line, column=self.column)


class HeadVectorError(ParseError):
    """Raised when a head vector does not encode a rooted tree."""

    pass


class NoRootError(HeadVectorError):
    """Raised when a head vector has no 0 entry."""

    pass


class MultipleRootsError(HeadVectorError):
    """Raised when a head vector has more than one 0 entry."""

    pass


class SelfHeadError(HeadVectorError):
    """Raised when a word is its own head."""

    pass


class OutOfRangeError(HeadVectorError):
    """Raised when a head points past the end of the sentence."""

    pass


class CycleError(HeadVectorError):
    """Raised when the head relation contains a cycle."""

    pass


class ConlluError(ParseError):
    """Raised when a CoNLL-U file is malformed."""

    pass


class MalformedLineError(ConlluError):
    """Raised on a token line that does not have ten well-formed columns."""

    pass


class NonContiguousIdsError(ConlluError):
    """Raised when token ids of a sentence are not 1..n."""

    pass


class HeadOutOfRangeError(ConlluError):
    """Raised when a HEAD column points outside its sentence."""

    pass


class TreeError(DeplinError):
    """Raised when an edge list does not describe a tree."""

    pass


class NotATreeError(TreeError):
    pass


class DuplicateEdgeError(TreeError):
    pass


class SelfLoopError(TreeError):
    pass


class VertexOutOfRangeError(TreeError):
    pass


class SizeMismatchError(DeplinError):
    """Raised when an arrangement and a tree have different vertex counts."""

    pass


class NoEdgesError(DeplinError):
    """Raised when a metric over edges is requested on a single vertex."""

    pass


class TooSmallError(DeplinError):
    """Raised when a metric is undefined for trees this small."""

    pass


class SizeLimitExceededError(DeplinError):
    """Raised when exhaustive enumeration is requested beyond the configured bound."""

    pass


class EnsembleTooLargeError(DeplinError):
    """Raised when exact estimation would enumerate too many items."""

    pass


class UnknownMetricError(DeplinError):
    """Raised when a metric or feature name is not registered."""

    def __init__(self, name: str, known: list[str]) -> None:
        self.name = name
        self.known = known
        super().__init__(f"Unknown metric '{name}'; registered: {', '.join(known)}")


class KindMismatchError(DeplinError):
    """Raised when a metric needs a rooted tree but the ensemble is free."""

    pass


class InputNotFoundError(DeplinError):
    """Raised when an input file does not exist."""

    def __init__(self, path: Path | str) -> None:
        self.path = Path(path)
        super().__init__(f"Input file not found: {path}")


class WriteError(DeplinError):
    """Raised when an output file cannot be written."""

    def __init__(self, path: Path | str, reason: str = "") -> None:
        self.path = Path(path)
        message = f"Cannot write {path}"
        if reason:
            message += f": {reason}"
        super().__init__(message)


class ConfigurationError(DeplinError):
    """Raised when configuration is invalid."""

    pass


class DuplicateOutputError(DeplinError):
    """Raised when two collection members would write the same output file."""

    pass
