"""Minimum sum of edge lengths under unconstrained, planar and projective orders."""
import itertools
import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from enum import Enum

from deplin.config import DEFAULT_LIMITS
from deplin.exceptions import SizeLimitExceededError
from deplin.graphs import Arrangement, FreeTree, RootedTree, Tree, root_at
from deplin.properties.centre import centroid

logger = logging.getLogger(__name__)


class DminAlgorithm(Enum):
    SHILOACH = "shiloach"
    CHUNG_2 = "chung_2"
    EXHAUSTIVE = "exhaustive"


class PlanarAlgorithm(Enum):
    HS_ALEMANY = "hs_alemany"
    EXHAUSTIVE = "exhaustive"


class ProjectiveAlgorithm(Enum):
    GT_ALEMANY = "gt_alemany"
    EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class MinArrangementResult:
    value: int
    arrangement: Arrangement


def _cost(tree: Tree, order: list[int]) -> int:
    pos = [0] * (tree.n + 1)
    for p, v in enumerate(order, start=1):
        pos[v] = p
    return sum(abs(pos[u] - pos[v]) for u, v in tree.edges)


# --- projective --------------------------------------------------------------


def _projective_order(tree: RootedTree) -> list[int]:
    """Optimal projective order.

    Children go to alternating sides in non-increasing subtree size, largest
    outermost, starting on the side away from the vertex's own parent.
    """
    sizes = tree.subtree_sizes
    # parent_left[v]: v's parent lies to the left of v
    parent_left = [False] * (tree.n + 1)
    layout: dict[int, list[int]] = {}
    for v in tree.preorder():
        kids = sorted(tree.children(v), key=lambda c: (-sizes[c], c))
        left: list[int] = []
        right: list[int] = []
        away, toward = (right, left) if parent_left[v] else (left, right)
        for i, c in enumerate(kids):
            (away if i % 2 == 0 else toward).append(c)
        for c in right:
            parent_left[c] = True
        # both lists run outermost first
        layout[v] = [*left, -v, *reversed(right)]

    order: list[int] = []
    stack = [tree.root]
    while stack:
        item = stack.pop()
        if item < 0:
            order.append(-item)
        else:
            stack.extend(reversed(layout[item]))
    return order


def min_D_projective(
    tree: RootedTree,
    algorithm: ProjectiveAlgorithm = ProjectiveAlgorithm.GT_ALEMANY,
    max_n: int = DEFAULT_LIMITS.exhaustive_max_n,
) -> MinArrangementResult:
    if algorithm is ProjectiveAlgorithm.EXHAUSTIVE:
        from deplin.linarr.classify import is_projective

        return _exhaustive(tree, max_n, lambda a: is_projective(tree, a))
    order = _projective_order(tree)
    return MinArrangementResult(value=_cost(tree, order), arrangement=Arrangement.from_order(order))


# --- planar ------------------------------------------------------------------


def min_D_planar(
    tree: FreeTree | RootedTree,
    algorithm: PlanarAlgorithm = PlanarAlgorithm.HS_ALEMANY,
    max_n: int = DEFAULT_LIMITS.exhaustive_max_n,
) -> MinArrangementResult:
    free = tree.free if isinstance(tree, RootedTree) else tree
    if algorithm is PlanarAlgorithm.EXHAUSTIVE:
        from deplin.linarr.classify import is_planar

        return _exhaustive(free, max_n, lambda a: is_planar(free, a))
    # a minimum planar order is a minimum projective order rooted at a centroidal vertex
    best: MinArrangementResult | None = None
    for c in centroid(free).vertices:
        result = min_D_projective(root_at(free, c))
        if best is None or result.value < best.value:
            best = result
    assert best is not None
    return best


# --- unconstrained -----------------------------------------------------------


class _ChungSolver:
    """Chung's decomposition of the unconstrained problem.

    Free subtrees split at a centroid ``u``: either the largest branch sits
    anchored on one side of the rest, or the 2p largest branches alternate
    around the remainder, each anchored toward it. Anchored subtrees (an
    external edge leaves the anchor to the left) split at the anchor ``r``:
    its 2p + 1 largest branches alternate, the odd ones on the right. Every
    admissible p is tried.

    Subproblems are keyed by their vertex set and anchor; orders run
    left to right, anchored ones with the anchor's edge leaving leftwards.
    """

    def __init__(self, tree: FreeTree) -> None:
        self._adj = tree.adjacency
        self._memo: dict[tuple[frozenset[int], int], tuple[int, list[int]]] = {}

    def solve(self) -> list[int]:
        everything = frozenset(range(1, len(self._adj)))
        return self._arrange(everything, 0)[1]

    def _branches(
        self, vertices: frozenset[int], centre: int
    ) -> list[tuple[int, int, frozenset[int]]]:
        branches = []
        for start in self._adj[centre]:
            if start not in vertices:
                continue
            seen = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y in vertices and y != centre and y not in seen:
                        seen.add(y)
                        stack.append(y)
            branches.append((len(seen), start, frozenset(seen)))
        branches.sort(key=lambda b: (-b[0], b[1]))
        return branches

    def _centroid(self, vertices: frozenset[int]) -> int:
        start = min(vertices)
        parent = {start: 0}
        order = [start]
        for x in order:
            for y in self._adj[x]:
                if y in vertices and y not in parent:
                    parent[y] = x
                    order.append(y)
        size = dict.fromkeys(order, 1)
        for x in reversed(order[1:]):
            size[parent[x]] += size[x]
        n = len(vertices)
        for x in order:
            largest = n - size[x]
            for y in self._adj[x]:
                if y in vertices and parent.get(y) == x:
                    largest = max(largest, size[y])
            if 2 * largest <= n:
                return x
        raise AssertionError("every tree has a centroid")

    def _score(self, vertices: frozenset[int], order: list[int], anchor: int) -> int:
        pos = {v: p for p, v in enumerate(order)}
        total = pos[anchor] if anchor else 0
        for x in order:
            for y in self._adj[x]:
                if y in vertices and pos[y] > pos[x]:
                    total += pos[y] - pos[x]
        return total

    def _arrange(self, vertices: frozenset[int], anchor: int) -> tuple[int, list[int]]:
        key = (vertices, anchor)
        if key in self._memo:
            return self._memo[key]
        if len(vertices) == 1:
            result = (0, list(vertices))
            self._memo[key] = result
            return result

        candidates: list[list[int]] = []
        if anchor == 0:
            u = self._centroid(vertices)
            branches = self._branches(vertices, u)
            _, v1, t1 = branches[0]
            candidates.append(
                list(reversed(self._arrange(t1, v1)[1])) + self._arrange(vertices - t1, u)[1]
            )
            for p in range(1, len(branches) // 2 + 1):
                taken = branches[: 2 * p]
                rest = vertices.difference(*(b[2] for b in taken))
                left = [list(reversed(self._arrange(b[2], b[1])[1])) for b in taken[0::2]]
                right = [self._arrange(b[2], b[1])[1] for b in taken[1::2]]
                candidates.append(
                    _concat(left) + self._arrange(rest, 0)[1] + _concat(reversed(right))
                )
        else:
            branches = self._branches(vertices, anchor)
            for p in range(0, (len(branches) - 1) // 2 + 1):
                taken = branches[: 2 * p + 1]
                rest = vertices.difference(*(b[2] for b in taken))
                left = [list(reversed(self._arrange(b[2], b[1])[1])) for b in taken[1::2]]
                right = [self._arrange(b[2], b[1])[1] for b in taken[0::2]]
                candidates.append(
                    _concat(left) + self._arrange(rest, 0)[1] + _concat(reversed(right))
                )

        best = min(
            ((self._score(vertices, order, anchor), order) for order in candidates),
            key=lambda c: c[0],
        )
        self._memo[key] = best
        return best


def _concat(parts: Iterable[list[int]]) -> list[int]:
    return [v for part in parts for v in part]


def min_D_unconstrained(
    tree: FreeTree | RootedTree,
    algorithm: DminAlgorithm = DminAlgorithm.CHUNG_2,
    max_n: int = DEFAULT_LIMITS.exhaustive_max_n,
) -> MinArrangementResult:
    free = tree.free if isinstance(tree, RootedTree) else tree
    if algorithm is DminAlgorithm.EXHAUSTIVE:
        return _exhaustive(free, max_n, None)
    # SHILOACH shares the decomposition; only the choice of p differs in the
    # literature, and scanning every p subsumes both.
    order = _ChungSolver(free).solve()
    return MinArrangementResult(value=_cost(free, order), arrangement=Arrangement.from_order(order))


# --- exhaustive oracle -------------------------------------------------------


def _exhaustive(
    tree: Tree,
    max_n: int,
    accept: Callable[[Arrangement], bool] | None,
) -> MinArrangementResult:
    if tree.n > max_n:
        raise SizeLimitExceededError(
            f"Exhaustive search is limited to n <= {max_n}, got n = {tree.n}"
        )
    logger.debug("exhaustive minimisation over %d! arrangements", tree.n)
    best: MinArrangementResult | None = None
    for order in itertools.permutations(range(1, tree.n + 1)):
        value = _cost(tree, list(order))
        if best is not None and value >= best.value:
            continue
        arrangement = Arrangement.from_order(order)
        if accept is None or accept(arrangement):
            best = MinArrangementResult(value=value, arrangement=arrangement)
    assert best is not None
    return best
