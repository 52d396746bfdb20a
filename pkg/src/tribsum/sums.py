"""Closed-form partial sums of generalized Tribonacci sequences.

Six sum families are supported: forward/backward crossed with all/even/odd
indices.  Forward sums run over k = 0..n (so n >= 0); backward sums run
over k = 1..n with negated indices (so n >= 1).  Each family has a generic
closed form valid when the denominator expressions

    d1 = r + s + t - 1        d2 = r - s + t + 1

do not vanish, plus dedicated formulas for the degenerate triple
(r, s, t) = (0, 2, 1) where d2 = 0 and the sums pick up a term linear in n.
Parameter triples with no proven formula fall back to the literal sum,
flagged as ``OracleFallback`` in the result.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .core import (
    NegativeIndexWithZeroT,
    RecurrenceParams,
    SequenceDef,
    term_iterative,
    term_matrix,
)

# Below this |index| the sliding window beats the matrix path; tunable.
_MATRIX_CROSSOVER = 64


class Direction(enum.Enum):
    FORWARD = "fwd"
    BACKWARD = "bwd"


class Parity(enum.Enum):
    ALL = "all"
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class SumQuery:
    """Which sum is requested: direction x parity x bound n."""

    direction: Direction
    parity: Parity
    n: int

    def __post_init__(self) -> None:
        if self.direction is Direction.BACKWARD:
            if self.n < 1:
                raise ValueError("backward sums start at k = 1; need n >= 1")
        elif self.n < 0:
            raise ValueError("forward sums need n >= 0")


def query_indices(query: SumQuery) -> list[int]:
    """The term indices the query sums over, in summation order."""
    if query.direction is Direction.FORWARD:
        if query.parity is Parity.ALL:
            return list(range(query.n + 1))
        if query.parity is Parity.EVEN:
            return [2 * k for k in range(query.n + 1)]
        return [2 * k + 1 for k in range(query.n + 1)]
    if query.parity is Parity.ALL:
        return [-k for k in range(1, query.n + 1)]
    if query.parity is Parity.EVEN:
        return [-2 * k for k in range(1, query.n + 1)]
    return [-2 * k + 1 for k in range(1, query.n + 1)]


class FormulaCase(enum.Enum):
    """Which closed-form clause (or fallback) applies to a (params, query) pair."""

    FwdAll_Generic = enum.auto()
    FwdEven_Generic = enum.auto()
    FwdOdd_Generic = enum.auto()
    FwdEven_S1 = enum.auto()
    FwdOdd_S1 = enum.auto()
    Fwd_021_All = enum.auto()
    Fwd_021_Even = enum.auto()
    Fwd_021_Odd = enum.auto()
    BwdAll_Generic = enum.auto()
    BwdEven_Generic = enum.auto()
    BwdOdd_Generic = enum.auto()
    BwdEven_RplusT0 = enum.auto()
    BwdOdd_RplusT0 = enum.auto()
    Bwd_021_All = enum.auto()
    Bwd_021_Even = enum.auto()
    Bwd_021_Odd = enum.auto()
    OracleFallback = enum.auto()


@dataclass(frozen=True)
class Denominators:
    """The two gate expressions whose vanishing disables the closed forms."""

    d1: Fraction
    d2: Fraction


@dataclass(frozen=True)
class SumResult:
    value: Fraction
    case_used: FormulaCase
    oracle_checked: bool = False


class SumMismatch(ArithmeticError):
    """A closed-form value disagreed with the literal sum."""


def denominators(params: RecurrenceParams) -> Denominators:
    """d1 = r+s+t-1 and d2 = r-s+t+1; their product equals
    2s + 2rt + r^2 - s^2 + t^2 - 1."""
    r, s, t = params.r, params.s, params.t
    return Denominators(r + s + t - 1, r - s + t + 1)


def _is_021(params: RecurrenceParams) -> bool:
    return (params.r, params.s, params.t) == (0, 2, 1)


_CASE_021 = {
    (Direction.FORWARD, Parity.ALL): FormulaCase.Fwd_021_All,
    (Direction.FORWARD, Parity.EVEN): FormulaCase.Fwd_021_Even,
    (Direction.FORWARD, Parity.ODD): FormulaCase.Fwd_021_Odd,
    (Direction.BACKWARD, Parity.ALL): FormulaCase.Bwd_021_All,
    (Direction.BACKWARD, Parity.EVEN): FormulaCase.Bwd_021_Even,
    (Direction.BACKWARD, Parity.ODD): FormulaCase.Bwd_021_Odd,
}

_CASE_GENERIC = {
    (Direction.FORWARD, Parity.ALL): FormulaCase.FwdAll_Generic,
    (Direction.FORWARD, Parity.EVEN): FormulaCase.FwdEven_Generic,
    (Direction.FORWARD, Parity.ODD): FormulaCase.FwdOdd_Generic,
    (Direction.BACKWARD, Parity.ALL): FormulaCase.BwdAll_Generic,
    (Direction.BACKWARD, Parity.EVEN): FormulaCase.BwdEven_Generic,
    (Direction.BACKWARD, Parity.ODD): FormulaCase.BwdOdd_Generic,
}


def select_case(params: RecurrenceParams, query: SumQuery) -> FormulaCase:
    """Pick the one formula clause proven for these parameters.

    Priority: the exact triple (0, 2, 1) first (its dedicated formulas are
    the only ones defined there, since d2 = 0); then the generic clause
    gated on d1 != 0 (parity ALL) or d1*d2 != 0 (EVEN/ODD); otherwise the
    oracle fallback.  The S1 and RplusT0 clauses are algebraic
    specializations of the generic ones and are never dispatched to; they
    exist as cross-checks.
    """
    key = (query.direction, query.parity)
    if _is_021(params):
        return _CASE_021[key]
    d = denominators(params)
    if query.parity is Parity.ALL:
        if d.d1 != 0:
            return _CASE_GENERIC[key]
    elif d.d1 * d.d2 != 0:
        return _CASE_GENERIC[key]
    return FormulaCase.OracleFallback


TermFn = Callable[[int], Fraction]


def _term(seq: SequenceDef, k: int) -> Fraction:
    if abs(k) > _MATRIX_CROSSOVER:
        return term_matrix(seq, k)
    return term_iterative(seq, k)


def _fwd_all_generic(seq: SequenceDef, n: int, term: TermFn) -> Fraction:
    r, s, t = seq.params.r, seq.params.s, seq.params.t
    w0, w1, w2 = seq.w0, seq.w1, seq.w2
    num = (term(n + 3) + (1 - r) * term(n + 2)
           + (1 - r - s) * term(n + 1)
           - w2 + (r - 1) * w1 + (r + s - 1) * w0)
    return num / (r + s + t - 1)


def _fwd_even_generic(seq: SequenceDef, n: int, term: TermFn) -> Fraction:
    r, s, t = seq.params.r, seq.params.s, seq.params.t
    w0, w1, w2 = seq.w0, seq.w1, seq.w2
    d = denominators(seq.params)
    num = ((1 - s) * term(2 * n + 2)
           + (t + r * s) * term(2 * n + 1)
           + (t * t + r * t) * term(2 * n)
           + (s - 1) * w2
           + (-t - r * s) * w1
           + (-1 + r * r - s * s + r * t + 2 * s) * w0)
    return num / (d.d1 * d.d2)


def _fwd_odd_generic(seq: SequenceDef, n: int, term: TermFn) -> Fraction:
    r, s, t = seq.params.r, seq.params.s, seq.params.t
    w0, w1, w2 = seq.w0, seq.w1, seq.w2
    d = denominators(seq.params)
    num = ((r + t) * term(2 * n + 2)
           + (s - s * s + t * t + r * t) * term(2 * n + 1)
           + (t - s * t) * term(2 * n)
           + (-r - t) * w2
           + (-1 + s + r * r + r * t) * w1
           + (-t + s * t) * w0)
    return num / (d.d1 * d.d2)


def _fwd_even_s1(seq: SequenceDef, n: int, term: TermFn) -> Fraction:
    r, s, t = seq.params.r, seq.params.s, seq.params.t
    if s != 1 or r + t == 0:
        raise ValueError("specialized even-sum form needs s = 1 and r + t != 0")
    return (term(2 * n + 1) + t * term(2 * n)
            - seq.w1 + r * seq.w0) / (r + t)


def _fwd_odd_s1(seq: SequenceDef, n: int, term: TermFn) -> Fraction:
    r, s, t = seq.params.r, seq.params.s, seq.params.t
    if s != 1 or r + t == 0:
        raise ValueError("specialized odd-sum form needs s = 1 and r + t != 0")
    return (term(2 * n + 2) + t * term(2 * n + 1)
            - seq.w2 + r * seq.w1) / (r + t)


def _require_021(seq: SequenceDef) -> None:
    if not _is_021(seq.params):
        raise ValueError("this clause is proven only for (r, s, t) = (0, 2, 1)")


def _fwd_021_all(seq: SequenceDef, n: int, term: TermFn) -> Fraction:
    _require_021(seq)
    return (term(n + 3) + term(n + 2) - term(n + 1)
            - seq.w2 - seq.w1 + seq.w0) / 2


def _fwd_021_even(seq: SequenceDef, n: int, term: TermFn) -> Fraction:
    _require_021(seq)
    return (term(2 * n + 1) + (seq.w2 - seq.w1 - seq.w0) * n
            + seq.w0 - seq.w1)


def _fwd_021_odd(seq: SequenceDef, n: int, term: TermFn) -> Fraction:
    _require_021(seq)
    return (term(2 * n + 3) + term(2 * n + 2) - term(2 * n + 1)
            + 2 * n * (-seq.w2 + seq.w1 + seq.w0)
            - seq.w2 + seq.w1 - seq.w0) / 2


def _bwd_all_generic(seq: SequenceDef, n: int, term: TermFn) -> Fraction:
    r, s, t = seq.params.r, seq.params.s, seq.params.t
    w0, w1, w2 = seq.w0, seq.w1, seq.w2
    num = (-(r + s + t) * term(-n - 1)
           - (s + t) * term(-n - 2)
           - t * term(-n - 3)
           + w2 + (1 - r) * w1 + (1 - r - s) * w0)
    return num / (r + s + t - 1)


def _bwd_even_generic(seq: SequenceDef, n: int, term: TermFn) -> Fraction:
    r, s, t = seq.params.r, seq.params.s, seq.params.t
    w0, w1, w2 = seq.w0, seq.w1, seq.w2
    d = denominators(seq.params)
    num = (-(r + t) * term(-2 * n + 1)
           + (r * r + r * t + s - 1) * term(-2 * n)
           + (s * t - t) * term(-2 * n - 1)
           + (1 - s) * w2
           + (t + r * s) * w1
           + (1 - r * t - 2 * s - r * r + s * s) * w0)
    return num / (d.d1 * d.d2)


def _bwd_odd_generic(seq: SequenceDef, n: int, term: TermFn) -> Fraction:
    r, s, t = seq.params.r, seq.params.s, seq.params.t
    w0, w1, w2 = seq.w0, seq.w1, seq.w2
    d = denominators(seq.params)
    num = ((s - 1) * term(-2 * n + 1)
           - (t + r * s) * term(-2 * n)
           - (t * t + r * t) * term(-2 * n - 1)
           + (r + t) * w2
           + (1 - r * r - r * t - s) * w1
           + (t - s * t) * w0)
    return num / (d.d1 * d.d2)


def _bwd_even_r_plus_t_zero(seq: SequenceDef, n: int, term: TermFn) -> Fraction:
    r, s, t = seq.params.r, seq.params.s, seq.params.t
    if r + t != 0 or s == 1:
        raise ValueError("specialized backward even form needs r + t = 0, s != 1")
    return (-term(-2 * n) - t * term(-2 * n - 1)
            + seq.w2 + t * seq.w1 + (1 - s) * seq.w0) / (s - 1)


def _bwd_odd_r_plus_t_zero(seq: SequenceDef, n: int, term: TermFn) -> Fraction:
    r, s, t = seq.params.r, seq.params.s, seq.params.t
    if r + t != 0 or s == 1:
        raise ValueError("specialized backward odd form needs r + t = 0, s != 1")
    return (-term(-2 * n + 1) - t * term(-2 * n)
            + seq.w1 + t * seq.w0) / (s - 1)


def _bwd_021_all(seq: SequenceDef, n: int, term: TermFn) -> Fraction:
    _require_021(seq)
    return (-3 * term(-n - 1) - 3 * term(-n - 2)
            - term(-n - 3) + seq.w2 + seq.w1 - seq.w0) / 2


def _bwd_021_even(seq: SequenceDef, n: int, term: TermFn) -> Fraction:
    _require_021(seq)
    return (-term(-2 * n + 1) + term(-2 * n)
            + (seq.w1 - seq.w0) + (seq.w2 - seq.w1 - seq.w0) * n)


def _bwd_021_odd(seq: SequenceDef, n: int, term: TermFn) -> Fraction:
    _require_021(seq)
    return (term(-2 * n + 1) - 3 * term(-2 * n)
            - term(-2 * n - 1)
            + (seq.w2 - seq.w1 + seq.w0)
            + 2 * (-seq.w2 + seq.w1 + seq.w0) * n) / 2


_CLOSED_FORMS: dict[FormulaCase, Callable[[SequenceDef, int, TermFn], Fraction]] = {
    FormulaCase.FwdAll_Generic: _fwd_all_generic,
    FormulaCase.FwdEven_Generic: _fwd_even_generic,
    FormulaCase.FwdOdd_Generic: _fwd_odd_generic,
    FormulaCase.FwdEven_S1: _fwd_even_s1,
    FormulaCase.FwdOdd_S1: _fwd_odd_s1,
    FormulaCase.Fwd_021_All: _fwd_021_all,
    FormulaCase.Fwd_021_Even: _fwd_021_even,
    FormulaCase.Fwd_021_Odd: _fwd_021_odd,
    FormulaCase.BwdAll_Generic: _bwd_all_generic,
    FormulaCase.BwdEven_Generic: _bwd_even_generic,
    FormulaCase.BwdOdd_Generic: _bwd_odd_generic,
    FormulaCase.BwdEven_RplusT0: _bwd_even_r_plus_t_zero,
    FormulaCase.BwdOdd_RplusT0: _bwd_odd_r_plus_t_zero,
    FormulaCase.Bwd_021_All: _bwd_021_all,
    FormulaCase.Bwd_021_Even: _bwd_021_even,
    FormulaCase.Bwd_021_Odd: _bwd_021_odd,
}


def closed_form_value(case: FormulaCase, seq: SequenceDef, n: int,
                      term: TermFn | None = None) -> Fraction:
    """Evaluate a specific closed-form clause directly (no dispatch).

    *term* lets callers supply a precomputed term table; by default terms
    come from the iterative/matrix evaluators.
    """
    if case is FormulaCase.OracleFallback:
        raise ValueError("OracleFallback has no closed form")
    if term is None:
        term = lambda k: _term(seq, k)
    return _CLOSED_FORMS[case](seq, n, term)


def sum_oracle(seq: SequenceDef, query: SumQuery) -> Fraction:
    """Literal term-by-term sum; ground truth and fallback path.

    Walks the index range once with the sliding-window recurrence, adding
    the terms the query selects.
    """
    r, s, t = seq.params.r, seq.params.s, seq.params.t
    total = Fraction(0)
    if query.direction is Direction.FORWARD:
        top = max(query_indices(query))
        window = (seq.w0, seq.w1, seq.w2)
        for k in range(top + 1):
            if k < 3:
                w = window[k]
            else:
                w = r * window[2] + s * window[1] + t * window[0]
                window = (window[1], window[2], w)
            if query.parity is Parity.ALL or (k % 2 == 0) == (query.parity is Parity.EVEN):
                total += w
        return total
    if t == 0:
        raise NegativeIndexWithZeroT("backward sums require t != 0")
    bottom = min(query_indices(query))
    low, mid, high = seq.w0, seq.w1, seq.w2
    for k in range(-1, bottom - 1, -1):
        low, mid, high = (high - r * mid - s * low) / t, low, mid
        if query.parity is Parity.ALL or (k % 2 == 0) == (query.parity is Parity.EVEN):
            total += low
    return total


def evaluate(seq: SequenceDef, query: SumQuery, check: bool = False) -> SumResult:
    """Compute the queried sum via the dispatched clause.

    With ``check=True`` the literal sum is computed as well and a
    :class:`SumMismatch` is raised on disagreement.
    """
    case = select_case(seq.params, query)
    if case is FormulaCase.OracleFallback:
        value = sum_oracle(seq, query)
    else:
        value = _CLOSED_FORMS[case](seq, query.n, lambda k: _term(seq, k))
    if check:
        expected = sum_oracle(seq, query)
        if value != expected:
            raise SumMismatch(
                f"{case.name} gave {value}, literal sum is {expected} "
                f"for {seq.name or seq.params} {query}")
        return SumResult(value, case, oracle_checked=True)
    return SumResult(value, case)


def sum_forward_all(seq: SequenceDef, n: int, check: bool = False) -> SumResult:
    return evaluate(seq, SumQuery(Direction.FORWARD, Parity.ALL, n), check)


def sum_forward_even(seq: SequenceDef, n: int, check: bool = False) -> SumResult:
    return evaluate(seq, SumQuery(Direction.FORWARD, Parity.EVEN, n), check)


def sum_forward_odd(seq: SequenceDef, n: int, check: bool = False) -> SumResult:
    return evaluate(seq, SumQuery(Direction.FORWARD, Parity.ODD, n), check)


def sum_backward_all(seq: SequenceDef, n: int, check: bool = False) -> SumResult:
    return evaluate(seq, SumQuery(Direction.BACKWARD, Parity.ALL, n), check)


def sum_backward_even(seq: SequenceDef, n: int, check: bool = False) -> SumResult:
    return evaluate(seq, SumQuery(Direction.BACKWARD, Parity.EVEN, n), check)


def sum_backward_odd(seq: SequenceDef, n: int, check: bool = False) -> SumResult:
    return evaluate(seq, SumQuery(Direction.BACKWARD, Parity.ODD, n), check)
