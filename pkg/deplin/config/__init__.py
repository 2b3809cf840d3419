from deplin.config.config import (
    DEFAULT_FUNCTION_WORDS,
    DEFAULT_LIMITS,
    AnalysisConfig,
    ConlluConfig,
    DeplinConfig,
    GenerationConfig,
    LimitsConfig,
    default_threads,
    load_config,
)

__all__ = [
    "DeplinConfig",
    "AnalysisConfig",
    "LimitsConfig",
    "ConlluConfig",
    "GenerationConfig",
    "DEFAULT_LIMITS",
    "DEFAULT_FUNCTION_WORDS",
    "default_threads",
    "load_config",
]
