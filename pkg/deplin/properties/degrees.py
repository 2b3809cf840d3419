"""Degree-based structural scores."""
from enum import Enum
from fractions import Fraction

from deplin.exceptions import KindMismatchError, TooSmallError
from deplin.graphs import FreeTree, RootedTree, Tree


class DegreeKind(Enum):
    TOTAL = "total"
    IN = "in"
    OUT = "out"


def num_independent_edge_pairs(tree: Tree) -> int:
    """Q: pairs of edges that share no vertex."""
    m = tree.n - 1
    free = tree.free if isinstance(tree, RootedTree) else tree
    return m * (m - 1) // 2 - sum(d * (d - 1) // 2 for d in free.degrees)


def degree_moment(tree: Tree, m: int, kind: DegreeKind = DegreeKind.TOTAL) -> Fraction:
    """<k^m>: the mean of the m-th power of the chosen degree."""
    if m < 0:
        raise ValueError(f"Moment order must be non-negative, got {m}")
    if kind is DegreeKind.TOTAL:
        degrees = [tree.degree(v) for v in tree.vertices]
    elif not isinstance(tree, RootedTree):
        raise KindMismatchError(f"{kind.value}-degree moments need a rooted tree")
    elif kind is DegreeKind.IN:
        degrees = [tree.in_degree(v) for v in tree.vertices]
    else:
        degrees = [tree.out_degree(v) for v in tree.vertices]
    return Fraction(sum(d**m for d in degrees), tree.n)


def hubiness(tree: FreeTree | RootedTree) -> Fraction:
    """Second degree moment scaled so that paths score 0 and stars 1."""
    n = tree.n
    if n < 4:
        raise TooSmallError(f"Hubiness is undefined for n < 4, got n = {n}")
    k2 = degree_moment(tree, 2)
    k2_path = Fraction(4 * n - 6, n)
    k2_star = Fraction(n - 1)
    return (k2 - k2_path) / (k2_star - k2_path)
