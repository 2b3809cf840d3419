from deplin.generate.arrangements import (
    Constraint,
    count_arrangements,
    exhaustive_arrangements,
    random_arrangement,
)
from deplin.generate.counting import free_count, restricted_rooted_count, rooted_count
from deplin.generate.rng import RNG_ALGORITHM, make_rng, randbelow
from deplin.generate.trees import (
    Labeling,
    Rooting,
    TreeKind,
    count_trees,
    exhaustive_trees,
    from_pruefer,
    random_tree,
)

__all__ = [
    "Constraint",
    "Labeling",
    "RNG_ALGORITHM",
    "Rooting",
    "TreeKind",
    "count_arrangements",
    "count_trees",
    "exhaustive_arrangements",
    "exhaustive_trees",
    "free_count",
    "from_pruefer",
    "make_rng",
    "randbelow",
    "random_arrangement",
    "random_tree",
    "restricted_rooted_count",
    "rooted_count",
]
