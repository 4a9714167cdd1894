"""seqforge: exact subset counting, integer sequences, and recurrence tools.

The subsets module holds the domain types and the brute-force enumeration
oracle; recurrences holds the named sequence generators; fasteval evaluates
arbitrary linear recurrences in O(k^2 log n); discovery recovers minimal
recurrences from prefixes; identities machine-checks the identities and the
counting bijection; cli fronts everything.
"""

from .discovery import BM_SAFETY_MARGIN, RecurrenceReport, berlekamp_massey, discover_order, verify_recurrence
from .fasteval import (
    EXACT,
    EvalMode,
    LinearRecurrence,
    eval_fast,
    eval_iterative,
    schreier_zeckendorf_count,
    tail_recurrence_of,
)
from .identities import (
    ConvergenceReport,
    IdentityReport,
    RatioSample,
    check_bijection_round_trip,
    check_fib_h,
    check_gen_shift,
    check_gen_sum,
    check_odd_gap_h,
    decimal_string,
    drop_max_shift_down,
    either_parity_family_size,
    even_gap_family_size,
    even_to_odd_ratio,
    odd_gap_family_size,
    ratio_report,
    scan_identity,
    shift_up_adjoin_max,
)
from .recurrences import (
    SequenceWindow,
    even_gap_counts,
    fibonacci,
    fibonacci_seq,
    gen_fib_seq,
    gen_h_seq,
    h_seq,
    k_seq,
    min_size_odd_gap_count,
    min_size_odd_gap_seq,
    odd_gap_counts,
    partial_sum,
    schreier_zeckendorf_seq,
)
from .subsets import (
    DEFAULT_ENUM_LIMIT,
    GAP_ALL_EVEN,
    GAP_ALL_ODD,
    GAP_ANY,
    BigCount,
    Condition,
    EnumerationLimitError,
    GapList,
    Subset,
    count_subsets,
    difference_set,
    enumerate_subsets,
    is_alpha_schreier,
    is_beta_zeckendorf,
    matches,
)

__version__ = "1.0.0"

__all__ = [
    "BM_SAFETY_MARGIN",
    "BigCount",
    "Condition",
    "ConvergenceReport",
    "DEFAULT_ENUM_LIMIT",
    "EXACT",
    "EnumerationLimitError",
    "EvalMode",
    "GAP_ALL_EVEN",
    "GAP_ALL_ODD",
    "GAP_ANY",
    "GapList",
    "IdentityReport",
    "LinearRecurrence",
    "RatioSample",
    "RecurrenceReport",
    "SequenceWindow",
    "Subset",
    "berlekamp_massey",
    "check_bijection_round_trip",
    "check_fib_h",
    "check_gen_shift",
    "check_gen_sum",
    "check_odd_gap_h",
    "count_subsets",
    "decimal_string",
    "difference_set",
    "discover_order",
    "drop_max_shift_down",
    "either_parity_family_size",
    "enumerate_subsets",
    "eval_fast",
    "eval_iterative",
    "even_gap_counts",
    "even_gap_family_size",
    "even_to_odd_ratio",
    "fibonacci",
    "fibonacci_seq",
    "gen_fib_seq",
    "gen_h_seq",
    "h_seq",
    "is_alpha_schreier",
    "is_beta_zeckendorf",
    "k_seq",
    "matches",
    "min_size_odd_gap_count",
    "min_size_odd_gap_seq",
    "odd_gap_counts",
    "odd_gap_family_size",
    "partial_sum",
    "ratio_report",
    "scan_identity",
    "schreier_zeckendorf_count",
    "schreier_zeckendorf_seq",
    "shift_up_adjoin_max",
    "tail_recurrence_of",
    "verify_recurrence",
]
