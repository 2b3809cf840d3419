"""Classes of tree shapes.

The flags are independent: a star is also a bistar, a caterpillar and a
spider. A quasistar is a star on n - 1 vertices with one edge subdivided,
so it has n >= 4 and maximum degree n - 2.
"""
from dataclasses import dataclass

from deplin.graphs import FreeTree, RootedTree


@dataclass(frozen=True)
class TreeShapeFlags:
    linear: bool
    star: bool
    quasistar: bool
    bistar: bool
    caterpillar: bool
    spider: bool


def _is_caterpillar(tree: FreeTree) -> bool:
    if tree.n <= 2:
        return True
    # the non-leaf vertices form a subtree; it is a path iff no inner vertex has
    # three or more inner neighbours
    inner = {v for v in tree.vertices if tree.degree(v) > 1}
    return all(sum(1 for w in tree.adjacency[v] if w in inner) <= 2 for v in inner)


def tree_shape(tree: FreeTree | RootedTree) -> TreeShapeFlags:
    free = tree.free if isinstance(tree, RootedTree) else tree
    n = free.n
    degrees = free.degrees[1:]
    max_degree = max(degrees, default=0)
    return TreeShapeFlags(
        linear=max_degree <= 2,
        star=n <= 2 or max_degree == n - 1,
        quasistar=n >= 4 and max_degree == n - 2,
        bistar=n == 1 or any(free.degree(u) + free.degree(v) == n for u, v in free.edges),
        caterpillar=_is_caterpillar(free),
        spider=sum(1 for d in degrees if d >= 3) <= 1,
    )
