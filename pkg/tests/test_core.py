import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tribsum.core import (
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

rationals = st.fractions(
    min_value=-9, max_value=9, max_denominator=9)


def seq_of(r, s, t, w0, w1, w2):
    return SequenceDef.of(r, s, t, w0, w1, w2)


class TestRationalHelpers:
    def test_parse_forms(self):
        assert as_rational("7") == 7
        assert as_rational("-3/4") == Fraction(-3, 4)
        assert as_rational(Fraction(1, 2)) == Fraction(1, 2)

    @pytest.mark.parametrize("bad", ["1.5", "2e3", "nan"])
    def test_decimal_rejected(self, bad):
        with pytest.raises(ValueError):
            as_rational(bad)

    def test_format(self):
        assert format_rational(Fraction(5)) == "5"
        assert format_rational(Fraction(-3, 7)) == "-3/7"

    def test_lowest_terms_invariant(self):
        q = as_rational("6/4")
        assert (q.numerator, q.denominator) == (3, 2)
        assert as_rational("-6/4") == Fraction(-3, 2)


class TestTermIterative:
    def test_initial_terms(self, tribonacci):
        assert term_iterative(tribonacci, 0) == 0
        assert term_iterative(tribonacci, 1) == 1
        assert term_iterative(tribonacci, 2) == 1

    def test_tribonacci_forward(self, tribonacci):
        assert term_iterative(tribonacci, 7) == 24

    def test_tribonacci_backward(self, tribonacci):
        assert term_iterative(tribonacci, -3) == -1
        # W_0 = W_{-1} + W_{-2} + W_{-3}
        assert term_iterative(tribonacci, -1) == 0
        assert term_iterative(tribonacci, -2) == 1

    def test_perrin_backward(self, perrin):
        assert term_iterative(perrin, -5) == 4

    def test_zero_t_negative_index_raises(self):
        seq = seq_of(1, 1, 0, 0, 1, 1)
        with pytest.raises(NegativeIndexWithZeroT):
            term_iterative(seq, -1)
        # forward evaluation stays fine
        assert term_iterative(seq, 5) == 5

    @given(r=rationals, s=rationals, t=rationals.filter(lambda q: q != 0),
           w0=rationals, w1=rationals, w2=rationals,
           n=st.integers(min_value=-50, max_value=50))
    @settings(max_examples=60, deadline=None)
    def test_recurrence_closure(self, r, s, t, w0, w1, w2, n):
        seq = seq_of(r, s, t, w0, w1, w2)
        lhs = term_iterative(seq, n)
        rhs = (r * term_iterative(seq, n - 1)
               + s * term_iterative(seq, n - 2)
               + t * term_iterative(seq, n - 3))
        assert lhs == rhs

    def test_integer_closure(self, catalog_defs):
        for seq in catalog_defs:
            for n in range(40):
                assert term_iterative(seq, n).denominator == 1


class TestCompanionMatrix:
    def test_layout(self):
        m = companion_matrix(RecurrenceParams(1, 1, 1))
        assert m.rows == ((1, 1, 1), (1, 0, 0), (0, 1, 0))
        m = companion_matrix(RecurrenceParams(0, 2, 1))
        assert m.rows == ((0, 2, 1), (1, 0, 0), (0, 1, 0))

    def test_determinant_is_t(self):
        assert companion_matrix(RecurrenceParams(2, 1, 1)).determinant() == 1
        assert companion_matrix(
            RecurrenceParams(Fraction(1, 3), 5, Fraction(-2, 7))
        ).determinant() == Fraction(-2, 7)

    def test_advances_state(self, tribonacci):
        m = companion_matrix(tribonacci.params).rows
        for n in range(-5, 10):
            state = tuple(term_iterative(tribonacci, n + d) for d in (2, 1, 0))
            advanced = tuple(
                sum(m[i][k] * state[k] for k in range(3)) for i in range(3))
            expected = tuple(
                term_iterative(tribonacci, n + 1 + d) for d in (2, 1, 0))
            assert advanced == expected


class TestTermMatrix:
    def test_identity_exponent(self, tribonacci):
        assert term_matrix(tribonacci, 2) == 1

    def test_tribonacci_13(self, tribonacci):
        assert term_matrix(tribonacci, 13) == 927

    def test_third_order_pell(self):
        seq = seq_of(2, 1, 1, 0, 1, 2)
        assert term_matrix(seq, 5) == 33

    def test_agrees_with_iterative_window(self, catalog_defs):
        for seq in catalog_defs:
            for n in range(-50, 51):
                assert term_matrix(seq, n) == term_iterative(seq, n)

    def test_zero_t_negative_index_raises(self):
        seq = seq_of(1, 1, 0, 0, 1, 1)
        with pytest.raises(NegativeIndexWithZeroT):
            term_matrix(seq, -4)

    @given(r=rationals, s=rationals, t=rationals.filter(lambda q: q != 0),
           w0=rationals, w1=rationals, w2=rationals,
           n=st.integers(min_value=-60, max_value=60))
    @settings(max_examples=60, deadline=None)
    def test_agreement_random(self, r, s, t, w0, w1, w2, n):
        seq = seq_of(r, s, t, w0, w1, w2)
        assert term_matrix(seq, n) == term_iterative(seq, n)

    @pytest.mark.parametrize("n", [3, 17, 64, 999, 4096, 10_000, -7, -1000])
    def test_multiplication_bound(self, tribonacci, n):
        counter = MultiplicationCounter()
        term_matrix(tribonacci, n, counter)
        bound = 2 * math.ceil(math.log2(abs(n) + 1)) + 2
        assert counter.count <= bound
