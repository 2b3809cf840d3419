"""Token removal, reattachment and length filtering before analysis."""
from collections.abc import Iterable
from dataclasses import dataclass, field

from deplin.config import DEFAULT_FUNCTION_WORDS, ConlluConfig
from deplin.conllu.parser import ConlluSentence
from deplin.exceptions import ConfigurationError
from deplin.graphs import HeadVector, validate_heads


@dataclass(frozen=True)
class PreprocessOptions:
    remove_punct: bool = False
    remove_function_words: bool = False
    function_words: frozenset[str] = field(
        default_factory=lambda: frozenset(DEFAULT_FUNCTION_WORDS)
    )
    min_len: int | None = None
    max_len: int | None = None

    def __post_init__(self) -> None:
        if self.min_len is not None and self.max_len is not None and self.min_len > self.max_len:
            raise ConfigurationError(f"min_len ({self.min_len}) exceeds max_len ({self.max_len})")

    @classmethod
    def from_config(cls, config: ConlluConfig) -> "PreprocessOptions":
        return cls(
            remove_punct=config.remove_punct,
            remove_function_words=config.remove_function_words,
            function_words=frozenset(config.function_words),
            min_len=config.min_len,
            max_len=config.max_len,
        )

    def removes(self, upos: str) -> bool:
        if self.remove_punct and upos == "PUNCT":
            return True
        return self.remove_function_words and upos in self.function_words


@dataclass(frozen=True)
class Filtered:
    """A sentence dropped by the length filter."""

    length: int
    reason: str


def _reduce(heads: list[int], removed: Iterable[int]) -> list[int]:
    """Head vector over the retained words.

    Each retained word attaches to its nearest retained ancestor. Words left
    without one (the root was removed) hang from the leftmost of them, which
    becomes the root.
    """
    gone = set(removed)
    kept = [i for i in range(1, len(heads) + 1) if i not in gone]
    if not kept:
        return []
    renumber = {old: new for new, old in enumerate(kept, start=1)}
    resolved = []
    for i in kept:
        h = heads[i - 1]
        while h and h in gone:
            h = heads[h - 1]
        resolved.append(renumber[h] if h else 0)
    orphans = [new for new, h in enumerate(resolved, start=1) if h == 0]
    promoted = orphans[0]
    for orphan in orphans[1:]:
        resolved[orphan - 1] = promoted
    return resolved


def preprocess(sentence: ConlluSentence, options: PreprocessOptions) -> HeadVector | Filtered:
    validate_heads(sentence.heads())
    removed = [t.id for t in sentence.tokens if options.removes(t.upos)]
    heads = _reduce(list(sentence.heads()), removed)
    n = len(heads)
    if n == 0:
        return Filtered(0, "every token was removed")
    if options.min_len is not None and n < options.min_len:
        return Filtered(n, f"shorter than {options.min_len}")
    if options.max_len is not None and n > options.max_len:
        return Filtered(n, f"longer than {options.max_len}")
    return HeadVector(tuple(heads))
