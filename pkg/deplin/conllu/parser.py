"""CoNLL-U reader.

Sentences are separated by blank lines and ``#`` lines are comments. Token
lines have ten tab-separated columns; multiword-token lines (``3-4``) and
empty nodes (``5.1``) are skipped.
"""
import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from pathlib import Path

from lark import Lark
from lark.exceptions import LarkError

from deplin.exceptions import (
    HeadOutOfRangeError,
    InputNotFoundError,
    MalformedLineError,
    NonContiguousIdsError,
)
from deplin.graphs import HeadVector
from deplin.io.treebank import DECODE_ERRORS, undecodable_column

logger = logging.getLogger(__name__)

ID_GRAMMAR = r"""
?start: word | multiword | empty
word: INT
multiword: INT "-" INT
empty: INT "." INT

%import common.INT
"""

_id_parser = Lark(ID_GRAMMAR, parser="lalr")

NUM_COLUMNS = 10


@dataclass(frozen=True)
class ConlluToken:
    id: int
    form: str
    lemma: str
    upos: str
    xpos: str
    feats: str
    head: int
    deprel: str
    deps: str
    misc: str


@dataclass(frozen=True)
class ConlluSentence:
    tokens: tuple[ConlluToken, ...]
    comments: tuple[str, ...] = ()
    line: int = 1

    def __len__(self) -> int:
        return len(self.tokens)

    def heads(self) -> tuple[int, ...]:
        return tuple(t.head for t in self.tokens)

    def head_vector(self) -> HeadVector:
        return HeadVector(self.heads())


# (line number, text) pairs of one sentence
Block = list[tuple[int, str]]


def _parse_token(number: int, text: str) -> ConlluToken | None:
    columns = text.split("\t")
    if len(columns) != NUM_COLUMNS:
        raise MalformedLineError(
            f"Expected {NUM_COLUMNS} tab-separated columns, found {len(columns)}", line=number
        )
    try:
        kind = _id_parser.parse(columns[0].strip())
    except LarkError as e:
        raise MalformedLineError(f"Invalid token id {columns[0]!r}", line=number) from e
    if kind.data != "word":
        return None
    try:
        head = int(columns[6])
    except ValueError as e:
        raise MalformedLineError(f"Invalid head {columns[6]!r}", line=number) from e
    return ConlluToken(
        id=int(columns[0]),
        form=columns[1],
        lemma=columns[2],
        upos=columns[3],
        xpos=columns[4],
        feats=columns[5],
        head=head,
        deprel=columns[7],
        deps=columns[8],
        misc=columns[9],
    )


class ConlluParser:
    """Parses CoNLL-U text into sentences, one block at a time."""

    def blocks(self, lines: Iterable[str]) -> Iterator[Block]:
        block: Block = []
        for number, raw in enumerate(lines, start=1):
            text = raw.rstrip("\r\n")
            if text.strip():
                block.append((number, text))
            elif block:
                yield block
                block = []
        if block:
            yield block

    def parse_block(self, block: Block) -> ConlluSentence:
        comments = []
        tokens = []
        for number, text in block:
            column = undecodable_column(text)
            if column is not None:
                raise MalformedLineError("Line is not valid UTF-8", line=number, column=column)
            if text.startswith("#"):
                comments.append(text)
                continue
            token = _parse_token(number, text)
            if token is not None:
                tokens.append(token)

        start = block[0][0]
        for expected, token in enumerate(tokens, start=1):
            if token.id != expected:
                raise NonContiguousIdsError(
                    f"Token ids must run 1..n, found {token.id} where {expected} was expected",
                    line=start,
                )
        for token in tokens:
            if not 0 <= token.head <= len(tokens):
                raise HeadOutOfRangeError(
                    f"Head {token.head} of token {token.id} outside 0..{len(tokens)}", line=start
                )
        return ConlluSentence(tokens=tuple(tokens), comments=tuple(comments), line=start)

    def iter_sentences(self, lines: Iterable[str]) -> Iterator[ConlluSentence]:
        for block in self.blocks(lines):
            sentence = self.parse_block(block)
            if sentence.tokens:
                yield sentence

    def parse(self, content: str) -> list[ConlluSentence]:
        return list(self.iter_sentences(content.splitlines()))

    def parse_file(self, path: Path) -> list[ConlluSentence]:
        return list(parse_conllu(path))


def parse_conllu(path: Path | str) -> Iterator[ConlluSentence]:
    """Stream the sentences of a CoNLL-U file."""
    path = Path(path)
    if not path.is_file():
        raise InputNotFoundError(path)
    return _stream(path)


def _stream(path: Path) -> Iterator[ConlluSentence]:
    with open(path, encoding="utf-8", errors=DECODE_ERRORS) as f:
        yield from ConlluParser().iter_sentences(f)
