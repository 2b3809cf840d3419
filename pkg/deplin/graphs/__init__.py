from deplin.graphs.arrangement import Arrangement, InvalidArrangementError, check_sizes
from deplin.graphs.head_vector import (
    HeadVector,
    from_head_vector,
    parse_head_vector_line,
    to_head_vector,
    validate_heads,
)
from deplin.graphs.tree import (
    Edge,
    FreeTree,
    RootedTree,
    from_edge_list,
    path_tree,
    relabel,
    relabel_rooted,
    root_at,
    star_tree,
    to_free,
)

Tree = FreeTree | RootedTree

__all__ = [
    "Arrangement",
    "Edge",
    "FreeTree",
    "HeadVector",
    "InvalidArrangementError",
    "RootedTree",
    "Tree",
    "check_sizes",
    "from_edge_list",
    "from_head_vector",
    "parse_head_vector_line",
    "path_tree",
    "relabel",
    "relabel_rooted",
    "root_at",
    "star_tree",
    "to_free",
    "to_head_vector",
    "validate_heads",
]
