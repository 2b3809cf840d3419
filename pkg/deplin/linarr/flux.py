"""Dependency flux at the gaps between consecutive words.

The flux at gap g (between positions g and g + 1) is the set of edges
spanning it. Its size is the number of such edges; its weight is the size
of the largest subset of pairwise vertex-disjoint spanning edges.
"""
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from deplin.exceptions import NoEdgesError
from deplin.graphs import Arrangement, Edge, Tree, check_sizes


@dataclass(frozen=True)
class GapFlux:
    gap: int
    dependencies: tuple[Edge, ...]
    size: int
    weight: int
    left_span: int
    right_span: int


@dataclass(frozen=True)
class FluxProfile:
    gaps: tuple[GapFlux, ...]

    def __len__(self) -> int:
        return len(self.gaps)

    def __getitem__(self, gap: int) -> GapFlux:
        return self.gaps[gap - 1]

    @property
    def sizes(self) -> list[int]:
        return [g.size for g in self.gaps]

    @property
    def weights(self) -> list[int]:
        return [g.weight for g in self.gaps]

    def max_size(self) -> int:
        return max(self.sizes)

    def mean_size(self) -> Fraction:
        return Fraction(sum(self.sizes), len(self.gaps))

    def max_weight(self) -> int:
        return max(self.weights)

    def mean_weight(self) -> Fraction:
        return Fraction(sum(self.weights), len(self.gaps))


def _max_matching(edges: list[Edge]) -> int:
    """Maximum matching of a forest: match each vertex to its parent bottom-up."""
    adjacency: dict[int, list[int]] = defaultdict(list)
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)

    matched: set[int] = set()
    visited: set[int] = set()
    size = 0
    for start in adjacency:
        if start in visited:
            continue
        visited.add(start)
        order = []
        parent = {start: 0}
        stack = [start]
        while stack:
            u = stack.pop()
            order.append(u)
            for w in adjacency[u]:
                if w not in visited:
                    visited.add(w)
                    parent[w] = u
                    stack.append(w)
        for u in reversed(order):
            p = parent[u]
            if p and u not in matched and p not in matched:
                matched.update((u, p))
                size += 1
    return size


def flux(tree: Tree, arrangement: Arrangement) -> FluxProfile:
    check_sizes(tree, arrangement)
    n = tree.n
    if n < 2:
        raise NoEdgesError("Flux needs at least two words")
    pos = arrangement.position
    spanning: list[list[Edge]] = [[] for _ in range(n)]
    for u, v in tree.edges:
        a, b = sorted((pos[u], pos[v]))
        for g in range(a, b):
            spanning[g].append((u, v))

    gaps = []
    for g in range(1, n):
        deps = spanning[g]
        ends = {w for e in deps for w in e}
        gaps.append(
            GapFlux(
                gap=g,
                dependencies=tuple(deps),
                size=len(deps),
                weight=_max_matching(deps),
                left_span=sum(1 for w in ends if pos[w] <= g),
                right_span=sum(1 for w in ends if pos[w] > g),
            )
        )
    return FluxProfile(gaps=tuple(gaps))
