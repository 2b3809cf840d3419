"""Closed-form expectations over uniformly random unconstrained arrangements."""
from fractions import Fraction

from deplin.exceptions import NoEdgesError
from deplin.graphs import FreeTree, RootedTree, Tree
from deplin.properties.degrees import num_independent_edge_pairs


def expected_D_unconstrained(tree: Tree) -> Fraction:
    """E[D] = (n^2 - 1) / 3; every edge has expected length (n + 1) / 3."""
    n = tree.n
    if n < 2:
        raise NoEdgesError("Expected D needs at least one edge")
    return Fraction(n * n - 1, 3)


def expected_C_unconstrained(tree: Tree) -> Fraction:
    """E[C] = Q / 3; four distinct endpoints interleave with probability 1/3."""
    if tree.n < 2:
        raise NoEdgesError("Expected C needs at least one edge")
    return Fraction(num_independent_edge_pairs(tree), 3)


def diameter(tree: FreeTree | RootedTree) -> int:
    free = tree.free if isinstance(tree, RootedTree) else tree
    return free.diameter()


def num_leaves(tree: FreeTree | RootedTree) -> int:
    free = tree.free if isinstance(tree, RootedTree) else tree
    return free.num_leaves()
