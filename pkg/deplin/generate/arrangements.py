"""Exhaustive and uniformly random linear arrangements under a constraint.

Projective arrangements are built by ordering, independently for each
vertex, the block formed by the vertex and its children. A planar
arrangement is a projective arrangement of the tree rooted at the word in
position 1, so each planar arrangement arises from exactly one rooting.
"""
import itertools
import math
from collections.abc import Iterator, Sequence
from enum import Enum

import numpy as np

from deplin.config import DEFAULT_LIMITS
from deplin.exceptions import KindMismatchError, SizeLimitExceededError
from deplin.graphs import Arrangement, FreeTree, RootedTree, Tree, root_at


class Constraint(Enum):
    UNCONSTRAINED = "unconstrained"
    PLANAR = "planar"
    PROJECTIVE = "projective"


def _free(tree: Tree) -> FreeTree:
    return tree.free if isinstance(tree, RootedTree) else tree


def _require_rooted(tree: Tree) -> RootedTree:
    if not isinstance(tree, RootedTree):
        raise KindMismatchError("Projective arrangements need a rooted tree")
    return tree


def count_arrangements(tree: Tree, constraint: Constraint) -> int:
    if constraint is Constraint.UNCONSTRAINED:
        return math.factorial(tree.n)
    if constraint is Constraint.PROJECTIVE:
        rooted = _require_rooted(tree)
        return math.prod(math.factorial(rooted.out_degree(v) + 1) for v in rooted.vertices)
    free = _free(tree)
    return free.n * math.prod(math.factorial(free.degree(v)) for v in free.vertices)


def _expand(tree: RootedTree, blocks: Sequence[Sequence[int]]) -> Arrangement:
    """Lay out ``blocks[v]`` (v and its children in order) recursively from the root."""
    order: list[int] = []
    stack = [(tree.root, False)]
    while stack:
        v, emit = stack.pop()
        if emit:
            order.append(v)
            continue
        for w in reversed(blocks[v]):
            stack.append((w, w == v))
    return Arrangement.from_order(order)


def _projective_blocks(tree: RootedTree, root_first: bool) -> Iterator[list[tuple[int, ...]]]:
    choices: list[list[tuple[int, ...]]] = [[()]]
    for v in tree.vertices:
        kids = tree.children(v)
        if root_first and v == tree.root:
            choices.append([(v, *p) for p in itertools.permutations(kids)])
        else:
            choices.append(list(itertools.permutations((v, *kids))))
    for combination in itertools.product(*choices):
        yield list(combination)


def exhaustive_arrangements(
    tree: Tree,
    constraint: Constraint = Constraint.UNCONSTRAINED,
    max_n: int = DEFAULT_LIMITS.exhaustive_max_n,
) -> Iterator[Arrangement]:
    """Yield each arrangement satisfying ``constraint`` exactly once, lazily."""
    if tree.n > max_n:
        raise SizeLimitExceededError(
            f"Exhaustive arrangements are limited to n <= {max_n}, got n = {tree.n}"
        )
    return _exhaustive(tree, constraint)


def _exhaustive(tree: Tree, constraint: Constraint) -> Iterator[Arrangement]:
    if constraint is Constraint.UNCONSTRAINED:
        for order in itertools.permutations(range(1, tree.n + 1)):
            yield Arrangement.from_order(order)
    elif constraint is Constraint.PROJECTIVE:
        rooted = _require_rooted(tree)
        for blocks in _projective_blocks(rooted, root_first=False):
            yield _expand(rooted, blocks)
    else:
        free = _free(tree)
        for r in free.vertices:
            rooted = root_at(free, r)
            for blocks in _projective_blocks(rooted, root_first=True):
                yield _expand(rooted, blocks)


def _shuffled(items: Sequence[int], rng: np.random.Generator) -> tuple[int, ...]:
    return tuple(items[int(i)] for i in rng.permutation(len(items)))


def _random_projective(tree: RootedTree, rng: np.random.Generator, root_first: bool) -> Arrangement:
    blocks: list[tuple[int, ...]] = [()]
    for v in tree.vertices:
        kids = tree.children(v)
        if root_first and v == tree.root:
            blocks.append((v, *_shuffled(kids, rng)))
        else:
            blocks.append(_shuffled((v, *kids), rng))
    return _expand(tree, blocks)


def random_arrangement(
    tree: Tree,
    constraint: Constraint,
    rng: np.random.Generator,
) -> Arrangement:
    """An arrangement drawn uniformly from those satisfying ``constraint``."""
    if constraint is Constraint.UNCONSTRAINED:
        return Arrangement.from_order([int(v) + 1 for v in rng.permutation(tree.n)])
    if constraint is Constraint.PROJECTIVE:
        return _random_projective(_require_rooted(tree), rng, root_first=False)
    # every vertex heads the same number of planar arrangements
    free = _free(tree)
    first = int(rng.integers(1, free.n + 1))
    return _random_projective(root_at(free, first), rng, root_first=True)
