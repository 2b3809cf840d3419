__version__ = "0.1.0"

from deplin.config import DeplinConfig, load_config
from deplin.exceptions import (
    ConfigurationError,
    DeplinError,
    NoEdgesError,
    ParseError,
    SizeLimitExceededError,
    SizeMismatchError,
    TreeError,
)
from deplin.graphs import (
    Arrangement,
    FreeTree,
    HeadVector,
    RootedTree,
    from_edge_list,
    from_head_vector,
    root_at,
    to_free,
    to_head_vector,
)

__all__ = [
    "__version__",
    "Arrangement",
    "FreeTree",
    "HeadVector",
    "RootedTree",
    "from_edge_list",
    "from_head_vector",
    "root_at",
    "to_free",
    "to_head_vector",
    "DeplinConfig",
    "load_config",
    "DeplinError",
    "ParseError",
    "TreeError",
    "SizeMismatchError",
    "NoEdgesError",
    "SizeLimitExceededError",
    "ConfigurationError",
]
