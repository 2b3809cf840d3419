from deplin.io.features import (
    FeatureSpec,
    Metric,
    default_feature_names,
    get_metric,
    metric_names,
    render_value,
)
from deplin.io.processing import (
    ProcessingOptions,
    ProcessingReport,
    SkippedSentence,
    TreebankProcessor,
    open_output,
    process_collection,
    process_treebank,
    read_collection_list,
)
from deplin.io.treebank import (
    DECODE_ERRORS,
    ErrorPolicy,
    TreebankRecord,
    TreebankSource,
    parse_line,
    read_head_vectors,
    undecodable_column,
)

__all__ = [
    "DECODE_ERRORS",
    "ErrorPolicy",
    "FeatureSpec",
    "Metric",
    "ProcessingOptions",
    "ProcessingReport",
    "SkippedSentence",
    "TreebankProcessor",
    "TreebankRecord",
    "TreebankSource",
    "default_feature_names",
    "get_metric",
    "metric_names",
    "open_output",
    "parse_line",
    "process_collection",
    "process_treebank",
    "read_collection_list",
    "read_head_vectors",
    "render_value",
    "undecodable_column",
]
