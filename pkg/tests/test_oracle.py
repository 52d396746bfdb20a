from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tribsum.core import NegativeIndexWithZeroT, SequenceDef, term_iterative
from tribsum.oracle import oracle_sum, oracle_term
from tribsum.sums import Direction, Parity, SumQuery

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=9)


class TestOracleTerm:
    def test_initials(self, tribonacci):
        assert oracle_term(tribonacci, 0) == 0
        assert oracle_term(tribonacci, 1) == 1
        assert oracle_term(tribonacci, 2) == 1

    def test_known_values(self, tribonacci, perrin):
        assert oracle_term(tribonacci, 7) == 24
        assert oracle_term(tribonacci, 13) == 927
        assert oracle_term(tribonacci, -3) == -1
        assert oracle_term(perrin, -5) == 4
        assert oracle_term(perrin, -1) == -1

    def test_zero_t_negative_raises(self):
        seq = SequenceDef.of(1, 1, 0, 0, 1, 1)
        with pytest.raises(NegativeIndexWithZeroT):
            oracle_term(seq, -2)

    @given(r=rationals, s=rationals, t=rationals.filter(lambda q: q != 0),
           w0=rationals, w1=rationals, w2=rationals,
           n=st.integers(min_value=-40, max_value=40))
    @settings(max_examples=50, deadline=None)
    def test_matches_iterative(self, r, s, t, w0, w1, w2, n):
        seq = SequenceDef.of(r, s, t, w0, w1, w2)
        assert oracle_term(seq, n) == term_iterative(seq, n)


class TestOracleSum:
    def test_forward_all(self, tribonacci):
        q = SumQuery(Direction.FORWARD, Parity.ALL, 10)
        assert oracle_sum(tribonacci, q) == 326

    def test_literal_addition(self, perrin):
        q = SumQuery(Direction.FORWARD, Parity.ODD, 3)
        expected = sum((oracle_term(perrin, k) for k in (1, 3, 5, 7)),
                       Fraction(0))
        assert oracle_sum(perrin, q) == expected

    def test_backward_even(self, pell_padovan):
        q = SumQuery(Direction.BACKWARD, Parity.EVEN, 1)
        assert oracle_sum(pell_padovan, q) == 3

    def test_zero_t_backward_raises(self):
        seq = SequenceDef.of(1, 1, 0, 0, 1, 1)
        with pytest.raises(NegativeIndexWithZeroT):
            oracle_sum(seq, SumQuery(Direction.BACKWARD, Parity.ALL, 2))
