from fractions import Fraction

from deplin.exceptions import NoEdgesError
from deplin.graphs import RootedTree


def mean_hierarchical_distance(tree: RootedTree) -> Fraction:
    """Mean depth of the non-root vertices."""
    if tree.n < 2:
        raise NoEdgesError("Mean hierarchical distance needs at least one dependency")
    return Fraction(sum(tree.depths), tree.n - 1)
