"""Naive reference implementations used as ground truth by every test.

Deliberately simple: terms are produced by a full-history loop and sums by
literal term-by-term addition.  Nothing here shares code with the closed
forms in :mod:`tribsum.sums`, so an agreement between the two is meaningful.
"""

from __future__ import annotations

from fractions import Fraction

from .core import NegativeIndexWithZeroT, SequenceDef
from .sums import Direction, SumQuery, query_indices


def _history(seq: SequenceDef, lo: int, hi: int) -> dict[int, Fraction]:
    """All terms W_lo .. W_hi, stored in a plain dict."""
    r, s, t = seq.params.r, seq.params.s, seq.params.t
    table: dict[int, Fraction] = {0: seq.w0, 1: seq.w1, 2: seq.w2}
    for n in range(3, hi + 1):
        table[n] = r * table[n - 1] + s * table[n - 2] + t * table[n - 3]
    if lo < 0:
        if t == 0:
            raise NegativeIndexWithZeroT(
                "backward history requires t != 0")
        for n in range(-1, lo - 1, -1):
            table[n] = (table[n + 3] - r * table[n + 2] - s * table[n + 1]) / t
    return table


def oracle_term(seq: SequenceDef, n: int) -> Fraction:
    """W_n by the naive full-history loop."""
    table = _history(seq, min(n, 0), max(n, 2))
    return table[n]


def oracle_sum(seq: SequenceDef, query: SumQuery) -> Fraction:
    """The literal sum of the terms selected by *query*."""
    indices = query_indices(query)
    if query.direction is Direction.BACKWARD and seq.params.t == 0:
        raise NegativeIndexWithZeroT("backward sums require t != 0")
    if not indices:
        return Fraction(0)
    table = _history(seq, min(indices + [0]), max(indices + [2]))
    total = Fraction(0)
    for k in indices:
        total += table[k]
    return total
