from deplin.utilities.isomorphism import (
    CanonicalCode,
    IsomorphismMode,
    are_isomorphic,
    canonical_code,
    free_canonical_code,
)

__all__ = [
    "CanonicalCode",
    "IsomorphismMode",
    "are_isomorphic",
    "canonical_code",
    "free_canonical_code",
]
