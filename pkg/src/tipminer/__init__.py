"""Target-oriented sequential pattern mining with clustered time-intervals.

Mines patterns that end in a chosen target itemset and carry a closed
time range between every pair of adjacent elements, the ranges being
derived from the data by recursive maximal-gap clustering.
"""

from .clustering import GapCluster, cluster, collect_gaps, debug_line, split_at_max_gap
from .dataio import (
    InputFormat,
    ParseError,
    ValidationError,
    dump_intermediate,
    load_dataset,
    report_json,
    report_table,
    save_dataset,
)
from .miner import (
    LevelResult,
    MiningConfig,
    MiningTrace,
    PairClustering,
    extend_to_ftis2,
    filter_frequent,
    gen_cs1,
    gen_cs2,
    join_ctis,
    mine,
    mine_detailed,
    support_interval,
    support_plain,
)
from .model import (
    Dataset,
    DuplicateTimestampError,
    EmptySequenceError,
    Event,
    Gap,
    GapList,
    IntervalPattern,
    Itemset,
    MiningError,
    NegativeTimestampError,
    Orientation,
    Sequence,
    Support,
    TimeRange,
    WrongOrientationError,
    parse_pattern,
    render_support,
    to_fraction,
    validate_sequence,
)
from .oracle import (
    InstanceTooLargeError,
    OracleConfig,
    exhaustive_mine,
    naive_support,
    random_dataset,
    random_instance,
)
from .preprocess import (
    EmptyResultError,
    TargetAbsentError,
    TargetSpec,
    filter_by_target,
    filter_patterns_by_target,
    prepare_working_dataset,
    rereverse_pattern,
    reverse_sequence,
    truncate_before_target,
)

__version__ = "0.1.0"

__all__ = [
    "Dataset",
    "DuplicateTimestampError",
    "EmptyResultError",
    "EmptySequenceError",
    "Event",
    "Gap",
    "GapCluster",
    "GapList",
    "InputFormat",
    "InstanceTooLargeError",
    "IntervalPattern",
    "Itemset",
    "LevelResult",
    "MiningConfig",
    "MiningError",
    "MiningTrace",
    "NegativeTimestampError",
    "OracleConfig",
    "Orientation",
    "PairClustering",
    "ParseError",
    "Sequence",
    "Support",
    "TargetAbsentError",
    "TargetSpec",
    "TimeRange",
    "ValidationError",
    "WrongOrientationError",
    "cluster",
    "collect_gaps",
    "debug_line",
    "dump_intermediate",
    "exhaustive_mine",
    "extend_to_ftis2",
    "filter_by_target",
    "filter_frequent",
    "filter_patterns_by_target",
    "gen_cs1",
    "gen_cs2",
    "join_ctis",
    "load_dataset",
    "mine",
    "mine_detailed",
    "naive_support",
    "parse_pattern",
    "prepare_working_dataset",
    "random_dataset",
    "random_instance",
    "render_support",
    "report_json",
    "report_table",
    "rereverse_pattern",
    "reverse_sequence",
    "save_dataset",
    "split_at_max_gap",
    "support_interval",
    "support_plain",
    "to_fraction",
    "truncate_before_target",
    "validate_sequence",
]
