from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from holeyaztec.exact import (
    IntegralityError,
    as_integer,
    binom2,
    check_index_set,
    check_partition,
    partition_from_index_set,
    q_shifted_factorial,
    shifted_factorial,
    vandermonde_quotient,
)


def test_shifted_factorial_basics():
    assert shifted_factorial(3, 0) == 1
    assert shifted_factorial(3, 2) == 12
    assert shifted_factorial(Fraction(1, 2), 3) == Fraction(15, 8)
    assert shifted_factorial(-2, 4) == 0


@given(
    st.fractions(max_denominator=6),
    st.integers(min_value=0, max_value=6),
    st.integers(min_value=0, max_value=6),
)
def test_shifted_factorial_splits(a, j, k):
    assert shifted_factorial(a, j + k) == shifted_factorial(a, j) * shifted_factorial(
        a + j, k
    )


def test_q_shifted_factorial_basics():
    q = Fraction(2)
    assert q_shifted_factorial(3, q, 0) == 1
    assert q_shifted_factorial(3, q, 2) == (1 - 3) * (1 - 6)
    assert q_shifted_factorial(1, q, 1) == 0


@given(
    st.fractions(max_denominator=4),
    st.fractions(max_denominator=4),
    st.integers(min_value=0, max_value=5),
    st.integers(min_value=0, max_value=5),
)
def test_q_shifted_factorial_splits(a, q, j, k):
    lhs = q_shifted_factorial(a, q, j + k)
    rhs = q_shifted_factorial(a, q, j) * q_shifted_factorial(a * q**j, q, k)
    assert lhs == rhs


def test_vandermonde_quotient_counts_tableaux():
    # number of column-strict fillings agrees with the product formula
    assert vandermonde_quotient((1, 2, 3)) == 1
    assert vandermonde_quotient((2, 4)) == 2
    assert vandermonde_quotient((1, 3, 5)) == 8


def test_partition_from_index_set():
    assert partition_from_index_set((1, 2, 3)) == (1, 1, 1)
    assert partition_from_index_set((2,)) == (2,)
    assert partition_from_index_set((1, 3)) == (2, 1)


def test_check_index_set_rejects_bad_input():
    with pytest.raises(ValueError):
        check_index_set((2, 2))
    with pytest.raises(ValueError):
        check_index_set((0, 1))
    with pytest.raises(ValueError):
        check_partition((1, 2))


def test_as_integer():
    assert as_integer(Fraction(8, 2)) == 4
    with pytest.raises(IntegralityError):
        as_integer(Fraction(7, 2))


def test_binom2():
    assert [binom2(n) for n in (-1, 0, 1, 2, 5)] == [1, 0, 0, 1, 10]
