"""Head vectors: the one-line-per-sentence interchange format.

A head vector of an n-word sentence lists, for each word, the position of
its head, with 0 marking the root. Tokens are base-10 integers separated
by spaces or tabs.
"""
from collections.abc import Sequence
from dataclasses import dataclass

from lark import Lark, Token
from lark.exceptions import UnexpectedInput

from deplin.exceptions import (
    CycleError,
    HeadVectorError,
    MultipleRootsError,
    NoRootError,
    OutOfRangeError,
    SelfHeadError,
)
from deplin.graphs.tree import FreeTree, RootedTree

HEAD_VECTOR_GRAMMAR = r"""
start: INT*

%import common.INT
%import common.WS_INLINE
%ignore WS_INLINE
"""

_parser = Lark(HEAD_VECTOR_GRAMMAR, parser="lalr")


def parse_head_vector_line(text: str) -> tuple[int, ...]:
    """Tokenize one line of a head-vector file without validating it as a tree."""
    try:
        tree = _parser.parse(text.rstrip("\r\n"))
    except UnexpectedInput as e:
        pos = e.pos_in_stream if isinstance(e.pos_in_stream, int) else None
        found = text[pos:].split()[0] if pos is not None and text[pos:].strip() else text.strip()
        column = e.column if isinstance(e.column, int) else None
        raise HeadVectorError(
            f"Expected non-negative integers, found {found!r}", column=column
        ) from e
    return tuple(int(tok) for tok in tree.children if isinstance(tok, Token))


def validate_heads(heads: Sequence[int]) -> int:
    """Check that ``heads`` encodes a rooted tree and return its root."""
    n = len(heads)
    if n == 0:
        raise NoRootError("Empty head vector")
    roots = []
    for i, h in enumerate(heads, start=1):
        if h < 0 or h > n:
            raise OutOfRangeError(f"Head {h} of word {i} outside 0..{n}")
        if h == i:
            raise SelfHeadError(f"Word {i} is its own head")
        if h == 0:
            roots.append(i)
    if not roots:
        raise NoRootError("No word has head 0")
    if len(roots) > 1:
        raise MultipleRootsError(f"Words {', '.join(map(str, roots))} all have head 0")

    # 0 = unvisited, 1 = on current chain, 2 = reaches the root
    state = [0] * (n + 1)
    state[roots[0]] = 2
    for start in range(1, n + 1):
        chain = []
        v = start
        while state[v] == 0:
            state[v] = 1
            chain.append(v)
            v = heads[v - 1]
        if state[v] == 1:
            raise CycleError(f"Heads form a cycle through word {v}")
        for w in chain:
            state[w] = 2
    return roots[0]


@dataclass(frozen=True)
class HeadVector:
    heads: tuple[int, ...]

    def __post_init__(self) -> None:
        validate_heads(self.heads)

    @classmethod
    def parse(cls, text: str) -> "HeadVector":
        return cls(parse_head_vector_line(text))

    def __len__(self) -> int:
        return len(self.heads)

    def __str__(self) -> str:
        return " ".join(map(str, self.heads))


def from_head_vector(hv: HeadVector | Sequence[int]) -> RootedTree:
    """Build the rooted tree whose vertex i is the i-th word."""
    heads = hv.heads if isinstance(hv, HeadVector) else tuple(hv)
    root = validate_heads(heads)
    n = len(heads)
    neighbours: list[list[int]] = [[] for _ in range(n + 1)]
    for i, h in enumerate(heads, start=1):
        if h:
            neighbours[i].append(h)
            neighbours[h].append(i)
    free = FreeTree(n=n, adjacency=tuple(tuple(sorted(a)) for a in neighbours))
    return RootedTree(free=free, root=root, parent=(0, *heads))


def to_head_vector(tree: RootedTree) -> HeadVector:
    return HeadVector(tree.head_vector())
