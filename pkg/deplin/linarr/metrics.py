"""Word-order-dependent scores of a tree under a linear arrangement."""
from enum import Enum
from fractions import Fraction

from deplin.exceptions import NoEdgesError
from deplin.graphs import Arrangement, RootedTree, Tree, check_sizes


class CrossingsAlgorithm(Enum):
    BRUTE_PAIRS = "brute_pairs"
    SWEEP = "sweep"


def _intervals(tree: Tree, arrangement: Arrangement) -> list[tuple[int, int]]:
    pos = arrangement.position
    spans = []
    for u, v in tree.edges:
        a, b = pos[u], pos[v]
        spans.append((a, b) if a < b else (b, a))
    return spans


def sum_edge_lengths(tree: Tree, arrangement: Arrangement) -> int:
    """D: the sum of |position(u) - position(v)| over all edges."""
    check_sizes(tree, arrangement)
    pos = arrangement.position
    return sum(abs(pos[u] - pos[v]) for u, v in tree.edges)


def mean_dependency_distance(tree: Tree, arrangement: Arrangement) -> Fraction:
    if tree.n < 2:
        raise NoEdgesError("Mean dependency distance needs at least one edge")
    return Fraction(sum_edge_lengths(tree, arrangement), tree.n - 1)


def _crossings_brute(spans: list[tuple[int, int]]) -> int:
    count = 0
    for i, (a, b) in enumerate(spans):
        for c, d in spans[i + 1 :]:
            if a < c < b < d or c < a < d < b:
                count += 1
    return count


def _crossings_sweep(spans: list[tuple[int, int]], n: int) -> int:
    # Edges sorted by left end; a Fenwick tree over right ends of earlier edges
    # counts, for (c, d), the earlier (a, b) with a < c < b < d.
    tree = [0] * (n + 1)

    def add(i: int) -> None:
        while i <= n:
            tree[i] += 1
            i += i & -i

    def prefix(i: int) -> int:
        s = 0
        while i > 0:
            s += tree[i]
            i -= i & -i
        return s

    by_left: list[list[int]] = [[] for _ in range(n + 1)]
    for c, d in spans:
        by_left[c].append(d)

    count = 0
    for c in range(1, n + 1):
        rights = by_left[c]
        for d in rights:
            count += prefix(d - 1) - prefix(c)
        for d in rights:
            add(d)
    return count


def num_crossings(
    tree: Tree,
    arrangement: Arrangement,
    algorithm: CrossingsAlgorithm = CrossingsAlgorithm.SWEEP,
) -> int:
    """C: pairs of edges on four distinct vertices whose spans interleave."""
    check_sizes(tree, arrangement)
    spans = _intervals(tree, arrangement)
    if algorithm is CrossingsAlgorithm.BRUTE_PAIRS:
        return _crossings_brute(spans)
    return _crossings_sweep(spans, tree.n)


def head_initial_ratio(tree: RootedTree, arrangement: Arrangement) -> Fraction:
    """Share of dependencies whose head precedes its dependent."""
    check_sizes(tree, arrangement)
    if tree.n < 2:
        raise NoEdgesError("Head-initial ratio needs at least one dependency")
    pos = arrangement.position
    initial = sum(1 for h, d in tree.arcs if pos[h] < pos[d])
    return Fraction(initial, tree.n - 1)


def is_root_covered(tree: RootedTree, arrangement: Arrangement) -> bool:
    check_sizes(tree, arrangement)
    r = arrangement.position[tree.root]
    return any(a < r < b for a, b in _intervals(tree, arrangement))
