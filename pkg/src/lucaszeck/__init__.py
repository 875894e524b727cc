"""Non-consecutive partitions of integers over the Lucas sequence.

Every natural number can be written as a sum of Lucas numbers whose
indices are pairwise at least two apart; unlike the Fibonacci case the
partition is not always unique, but it never splits more than two ways.
This package enumerates such partitions exactly, generates the families
of integers singled out by a fixed summand in closed form, and measures
how common the doubly-partitioned integers are.
"""

from .sequences import (
    FIBONACCI,
    GOLDEN_PREFIX_CAP,
    INT64_MAX,
    LUCAS,
    RecurrenceSpec,
    SequenceOverflowError,
    b_count,
    floor_div_phi,
    golden_char,
    golden_prefix,
    iter_terms,
    term,
)
from .partitions import (
    ACHIEVABLE_MAX_M,
    IndexPartition,
    PartitionSet,
    SumRangeReport,
    achievable_sums,
    canonical_partition,
    count_double_partition_integers,
    count_partitions,
    enumerate_partitions,
    fibonacci_zeckendorf,
    max_partition_count,
    smallest_summand_index,
    smallest_summand_scan,
    verify_successor_pair,
    verify_sum_coverage,
)
from .fixed_terms import (
    DoublePartitionSet,
    SummandClassSequence,
    contains_summand,
    double_partition_values,
    integers_with_summand,
    iter_double_partition_values,
    iter_integers_with_summand,
    smallest_summand_sequence,
    verify_double_partition_gaps,
    verify_gap_structure,
)
from .density import (
    DensityReport,
    count_approximation_ok,
    count_nonunique,
    density_report,
    density_table,
    limiting_density,
    limiting_density_scaled,
)

__version__ = "0.1.0"

__all__ = [
    "ACHIEVABLE_MAX_M",
    "DensityReport",
    "DoublePartitionSet",
    "FIBONACCI",
    "GOLDEN_PREFIX_CAP",
    "INT64_MAX",
    "IndexPartition",
    "LUCAS",
    "PartitionSet",
    "RecurrenceSpec",
    "SequenceOverflowError",
    "SumRangeReport",
    "SummandClassSequence",
    "achievable_sums",
    "b_count",
    "canonical_partition",
    "contains_summand",
    "count_approximation_ok",
    "count_double_partition_integers",
    "count_nonunique",
    "count_partitions",
    "density_report",
    "density_table",
    "double_partition_values",
    "enumerate_partitions",
    "fibonacci_zeckendorf",
    "floor_div_phi",
    "golden_char",
    "golden_prefix",
    "integers_with_summand",
    "iter_double_partition_values",
    "iter_integers_with_summand",
    "iter_terms",
    "limiting_density",
    "limiting_density_scaled",
    "max_partition_count",
    "smallest_summand_index",
    "smallest_summand_scan",
    "smallest_summand_sequence",
    "term",
    "verify_double_partition_gaps",
    "verify_gap_structure",
    "verify_successor_pair",
    "verify_sum_coverage",
]
