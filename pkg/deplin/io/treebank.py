"""Streaming reader for head-vector treebanks: one sentence per line."""
import logging
from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from deplin.exceptions import HeadVectorError, InputNotFoundError, ParseError
from deplin.graphs import HeadVector

logger = logging.getLogger(__name__)

# Undecodable bytes survive reading as lone surrogates U+DC80..U+DCFF.
DECODE_ERRORS = "surrogateescape"


class ErrorPolicy(Enum):
    FAIL_FAST = "fail_fast"
    SKIP_AND_REPORT = "skip_and_report"


def undecodable_column(text: str) -> int | None:
    """1-based column of the first byte of ``text`` that was not valid UTF-8."""
    for column, char in enumerate(text, start=1):
        if "\udc80" <= char <= "\udcff":
            return column
    return None


def parse_line(text: str) -> HeadVector:
    column = undecodable_column(text)
    if column is not None:
        raise HeadVectorError("Line is not valid UTF-8", column=column)
    return HeadVector.parse(text)


@dataclass(frozen=True)
class TreebankRecord:
    """One non-blank line: a valid head vector or the error it raised."""

    line: int
    heads: HeadVector | None = None
    error: ParseError | None = None

    @property
    def ok(self) -> bool:
        return self.heads is not None


class TreebankSource:
    """Lazily iterates the sentences of a head-vector file in file order.

    Blank lines are ignored. Under ``FAIL_FAST`` the first invalid line
    raises; otherwise it is yielded as a record carrying its error.
    """

    def __init__(
        self, path: Path | str, error_policy: ErrorPolicy = ErrorPolicy.SKIP_AND_REPORT
    ) -> None:
        self.path = Path(path)
        self.error_policy = error_policy
        if not self.path.is_file():
            raise InputNotFoundError(self.path)

    def __iter__(self) -> Iterator[TreebankRecord]:
        with open(self.path, encoding="utf-8", errors=DECODE_ERRORS) as f:
            for number, text in enumerate(f, start=1):
                if not text.strip():
                    continue
                try:
                    heads = parse_line(text)
                except ParseError as e:
                    located = e.at_line(number)
                    if self.error_policy is ErrorPolicy.FAIL_FAST:
                        raise located from e
                    logger.warning("%s: skipping line %d: %s", self.path.name, number, e.reason)
                    yield TreebankRecord(line=number, error=located)
                    continue
                yield TreebankRecord(line=number, heads=heads)

    def sentences(self) -> Iterator[HeadVector]:
        for record in self:
            if record.heads is not None:
                yield record.heads


def read_head_vectors(
    path: Path | str, error_policy: ErrorPolicy = ErrorPolicy.SKIP_AND_REPORT
) -> TreebankSource:
    return TreebankSource(path, error_policy)
