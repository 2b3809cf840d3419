from deplin.properties.centre import CentreResult, centre, centroid
from deplin.properties.degrees import (
    DegreeKind,
    degree_moment,
    hubiness,
    num_independent_edge_pairs,
)
from deplin.properties.expectation import (
    diameter,
    expected_C_unconstrained,
    expected_D_unconstrained,
    num_leaves,
)
from deplin.properties.hierarchy import mean_hierarchical_distance
from deplin.properties.shape import TreeShapeFlags, tree_shape

__all__ = [
    "CentreResult",
    "DegreeKind",
    "TreeShapeFlags",
    "centre",
    "centroid",
    "degree_moment",
    "diameter",
    "expected_C_unconstrained",
    "expected_D_unconstrained",
    "hubiness",
    "mean_hierarchical_distance",
    "num_independent_edge_pairs",
    "num_leaves",
    "tree_shape",
]
