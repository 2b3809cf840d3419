from collections.abc import Sequence
from dataclasses import dataclass

from deplin.exceptions import DeplinError, SizeMismatchError
from deplin.graphs.tree import FreeTree, RootedTree


class InvalidArrangementError(DeplinError):
    """Raised when a position list is not a permutation of 1..n."""

    pass


@dataclass(frozen=True)
class Arrangement:
    """Linear arrangement: vertex -> position and its inverse, both 1-based.

    Index 0 of both tuples is an unused slot.
    """

    position: tuple[int, ...]
    inverse: tuple[int, ...]

    @classmethod
    def from_positions(cls, positions: Sequence[int]) -> "Arrangement":
        """``positions[i]`` is the position of vertex ``i + 1``."""
        n = len(positions)
        inverse = [0] * (n + 1)
        for v, p in enumerate(positions, start=1):
            if not 1 <= p <= n or inverse[p]:
                raise InvalidArrangementError(f"Positions {list(positions)} are not a permutation")
            inverse[p] = v
        return cls(position=(0, *positions), inverse=tuple(inverse))

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "Arrangement":
        """``order[p]`` is the vertex placed at position ``p + 1``."""
        n = len(order)
        position = [0] * (n + 1)
        for p, v in enumerate(order, start=1):
            if not 1 <= v <= n or position[v]:
                raise InvalidArrangementError(f"Order {list(order)} is not a permutation")
            position[v] = p
        return cls(position=tuple(position), inverse=(0, *order))

    @classmethod
    def identity(cls, n: int) -> "Arrangement":
        ident = tuple(range(n + 1))
        return cls(position=ident, inverse=ident)

    def __len__(self) -> int:
        return len(self.position) - 1

    def __getitem__(self, vertex: int) -> int:
        return self.position[vertex]

    def vertex_at(self, position: int) -> int:
        return self.inverse[position]

    def order(self) -> tuple[int, ...]:
        return self.inverse[1:]

    def as_positions(self) -> list[int]:
        return list(self.position[1:])

    def __str__(self) -> str:
        return " ".join(map(str, self.position[1:]))


def check_sizes(tree: FreeTree | RootedTree, arrangement: Arrangement) -> None:
    if len(arrangement) != tree.n:
        raise SizeMismatchError(
            f"Arrangement has {len(arrangement)} positions but the tree has {tree.n} vertices"
        )
