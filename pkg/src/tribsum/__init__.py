"""Exact-arithmetic generalized Tribonacci terms and closed-form partial sums."""

from .catalog import CatalogEntry, UnknownSequence, list_all, lookup
from .core import (
    CompanionMatrix,
    MultiplicationCounter,
    NegativeIndexWithZeroT,
    RecurrenceParams,
    SequenceDef,
    as_rational,
    companion_matrix,
    format_rational,
    term_iterative,
    term_matrix,
)
from .oeis import (
    AlignmentReport,
    AlignmentStatus,
    BFile,
    FetchFailed,
    FixtureMissing,
    MalformedBFile,
    Source,
    align,
    fetch_bfile,
    parse_bfile,
)
from .oracle import oracle_sum, oracle_term
from .sums import (
    Denominators,
    Direction,
    FormulaCase,
    Parity,
    SumMismatch,
    SumQuery,
    SumResult,
    closed_form_value,
    denominators,
    evaluate,
    select_case,
    sum_backward_all,
    sum_backward_even,
    sum_backward_odd,
    sum_forward_all,
    sum_forward_even,
    sum_forward_odd,
    sum_oracle,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
