from deplin.linarr.classify import (
    ArrangementFlags,
    classify_arrangement,
    is_one_endpoint_crossing,
    is_planar,
    is_projective,
)
from deplin.linarr.dmin import (
    DminAlgorithm,
    MinArrangementResult,
    PlanarAlgorithm,
    ProjectiveAlgorithm,
    min_D_planar,
    min_D_projective,
    min_D_unconstrained,
)
from deplin.linarr.flux import FluxProfile, GapFlux, flux
from deplin.linarr.metrics import (
    CrossingsAlgorithm,
    head_initial_ratio,
    is_root_covered,
    mean_dependency_distance,
    num_crossings,
    sum_edge_lengths,
)

__all__ = [
    "ArrangementFlags",
    "CrossingsAlgorithm",
    "DminAlgorithm",
    "FluxProfile",
    "GapFlux",
    "MinArrangementResult",
    "PlanarAlgorithm",
    "ProjectiveAlgorithm",
    "classify_arrangement",
    "flux",
    "head_initial_ratio",
    "is_one_endpoint_crossing",
    "is_planar",
    "is_projective",
    "is_root_covered",
    "mean_dependency_distance",
    "min_D_planar",
    "min_D_projective",
    "min_D_unconstrained",
    "num_crossings",
    "sum_edge_lengths",
]
