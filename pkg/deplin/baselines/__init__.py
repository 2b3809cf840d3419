from deplin.baselines.estimation import (
    BLOCK_SIZE,
    EstimationMode,
    EstimationResult,
    estimate_over_arrangements,
    estimate_over_trees,
)
from deplin.io.features import get_metric, metric_names

__all__ = [
    "BLOCK_SIZE",
    "EstimationMode",
    "EstimationResult",
    "estimate_over_arrangements",
    "estimate_over_trees",
    "get_metric",
    "metric_names",
]
