"""Exhaustive and uniformly random generation of trees.

Labeled trees come from Pruefer sequences. Unlabeled rooted trees are
enumerated as canonical level sequences and sampled with the recursive
counting method; unlabeled free trees are sampled around their centroid.
"""
import heapq
import itertools
import logging
from collections.abc import Iterator, Sequence
from enum import Enum

import numpy as np

from deplin.generate.counting import (
    bicentroidal_count,
    free_count,
    labeled_free_count,
    labeled_rooted_count,
    restricted_rooted_count,
    rooted_count,
)
from deplin.generate.rng import randbelow
from deplin.graphs import FreeTree, RootedTree, from_edge_list, root_at
from deplin.properties.centre import centre
from deplin.utilities.isomorphism import canonical_code

logger = logging.getLogger(__name__)


class Labeling(Enum):
    LABELED = "labeled"
    UNLABELED = "unlabeled"


class Rooting(Enum):
    FREE = "free"
    ROOTED = "rooted"


class TreeKind(Enum):
    LABELED_FREE = "labeled-free"
    LABELED_ROOTED = "labeled-rooted"
    UNLABELED_FREE = "unlabeled-free"
    UNLABELED_ROOTED = "unlabeled-rooted"

    @classmethod
    def parse(cls, text: str) -> "TreeKind":
        try:
            return cls(text.strip().lower().replace("_", "-"))
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"Unknown tree kind {text!r}; expected one of {choices}") from None

    @property
    def labeling(self) -> Labeling:
        return Labeling(self.value.split("-")[0])

    @property
    def rooting(self) -> Rooting:
        return Rooting(self.value.split("-")[1])

    @property
    def rooted(self) -> bool:
        return self.rooting is Rooting.ROOTED

    def __str__(self) -> str:
        return self.value


def count_trees(kind: TreeKind, n: int) -> int:
    if n < 1:
        raise ValueError(f"Trees need at least one vertex, got n = {n}")
    if kind is TreeKind.LABELED_FREE:
        return labeled_free_count(n)
    if kind is TreeKind.LABELED_ROOTED:
        return labeled_rooted_count(n)
    if kind is TreeKind.UNLABELED_ROOTED:
        return rooted_count(n)
    return free_count(n)


# --- Pruefer sequences -------------------------------------------------------


def from_pruefer(sequence: Sequence[int], n: int) -> FreeTree:
    if n == 1:
        return from_edge_list(1, [])
    degree = [1] * (n + 1)
    for x in sequence:
        degree[x] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return from_edge_list(n, edges)


# --- level sequences ---------------------------------------------------------


def _level_sequences(n: int) -> Iterator[list[int]]:
    """Canonical level sequences of rooted trees, in decreasing order."""
    levels = list(range(n))
    while True:
        yield list(levels)
        p = n - 1
        while p > 0 and levels[p] <= 1:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while levels[q] != levels[p] - 1:
            q -= 1
        for i in range(p, n):
            levels[i] = levels[i - (p - q)]


def _from_level_sequence(levels: Sequence[int]) -> RootedTree:
    last_at_level: list[int] = []
    edges = []
    for v, level in enumerate(levels, start=1):
        del last_at_level[level:]
        if level:
            edges.append((last_at_level[level - 1], v))
        last_at_level.append(v)
    return root_at(from_edge_list(len(levels), edges), 1)


def _unlabeled_free(n: int) -> Iterator[FreeTree]:
    # keep each rooted class whose root is the central vertex with the least code
    for levels in _level_sequences(n):
        rooted = _from_level_sequence(levels)
        centres = centre(rooted.free).vertices
        if 1 not in centres:
            continue
        own = canonical_code(rooted)
        if all(own <= canonical_code(root_at(rooted.free, c)) for c in centres if c != 1):
            yield rooted.free


def exhaustive_trees(kind: TreeKind, n: int) -> Iterator[FreeTree | RootedTree]:
    """Yield every tree of the kind on n vertices exactly once, lazily."""
    if n < 1:
        raise ValueError(f"Trees need at least one vertex, got n = {n}")
    logger.debug("enumerating %s trees with n = %d", kind, n)
    if kind.labeling is Labeling.LABELED:
        for sequence in itertools.product(range(1, n + 1), repeat=max(n - 2, 0)):
            free = from_pruefer(sequence, n)
            if kind.rooted:
                for r in free.vertices:
                    yield root_at(free, r)
            else:
                yield free
    elif kind.rooted:
        for levels in _level_sequences(n):
            yield _from_level_sequence(levels)
    else:
        yield from _unlabeled_free(n)


# --- uniform sampling --------------------------------------------------------

# A shape is a parent list over 0..size-1 with -1 at the root (index 0).
_Shape = list[int]


def _attach(base: _Shape, sub: _Shape, copies: int) -> None:
    for _ in range(copies):
        offset = len(base)
        base.append(0)
        base.extend(p + offset for p in sub[1:])


def _random_shape(n: int, rng: np.random.Generator, max_branch: int | None = None) -> _Shape:
    """Uniform unlabeled rooted tree, optionally with root branches of at most ``max_branch``.

    The root keeps splitting off j identical copies of a uniform tree of size d
    with probability proportional to d * t(d) * count(n - j d).
    """

    def count(k: int) -> int:
        if max_branch is None:
            return rooted_count(k)
        return restricted_rooted_count(k, max_branch)

    shape: _Shape = [-1]
    remaining = n
    while remaining > 1:
        largest = remaining - 1 if max_branch is None else min(max_branch, remaining - 1)
        r = randbelow(rng, (remaining - 1) * count(remaining))
        chosen = None
        for d in range(1, largest + 1):
            weight = d * rooted_count(d)
            j = 1
            while j * d <= remaining - 1:
                r -= weight * count(remaining - j * d)
                if r < 0:
                    chosen = (j, d)
                    break
                j += 1
            if chosen:
                break
        assert chosen is not None
        j, d = chosen
        _attach(shape, _random_shape(d, rng), j)
        remaining -= j * d
    return shape


def _shape_edges(shape: _Shape) -> list[tuple[int, int]]:
    return [(p + 1, v + 1) for v, p in enumerate(shape) if p >= 0]


def _random_unlabeled_free(n: int, rng: np.random.Generator) -> FreeTree:
    half = n // 2
    bicentroidal = bicentroidal_count(n)
    if bicentroidal and randbelow(rng, free_count(n)) < bicentroidal:
        t = rooted_count(half)
        first = _random_shape(half, rng)
        if randbelow(rng, t + 1) < 2:
            second = first
        else:
            # distinct unordered pairs are equally likely under rejection
            first_code = _shape_code(first)
            while True:
                second = _random_shape(half, rng)
                if _shape_code(second) != first_code:
                    break
        edges = _shape_edges(first)
        edges += [(u + half, v + half) for u, v in _shape_edges(second)]
        edges.append((1, half + 1))
        return from_edge_list(n, edges)
    shape = _random_shape(n, rng, max_branch=(n - 1) // 2)
    return from_edge_list(n, _shape_edges(shape))


def _shape_code(shape: _Shape) -> str:
    return canonical_code(root_at(from_edge_list(len(shape), _shape_edges(shape)), 1))


def random_tree(kind: TreeKind, n: int, rng: np.random.Generator) -> FreeTree | RootedTree:
    """A tree drawn uniformly from all trees of the kind on n vertices."""
    if n < 1:
        raise ValueError(f"Trees need at least one vertex, got n = {n}")
    if kind.labeling is Labeling.UNLABELED:
        if kind.rooted:
            return root_at(from_edge_list(n, _shape_edges(_random_shape(n, rng))), 1)
        return _random_unlabeled_free(n, rng)
    sequence = [int(x) for x in rng.integers(1, n + 1, size=max(n - 2, 0))]
    free = from_pruefer(sequence, n)
    if kind.rooted:
        return root_at(free, int(rng.integers(1, n + 1)))
    return free
