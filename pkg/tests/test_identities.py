from fractions import Fraction
from itertools import combinations

import pytest

from holeyaztec.identities import (
    closed_3_5,
    closed_3_6,
    lhs_theorem3,
    lhs_theorem5,
    rhs_theorem3,
    rhs_theorem5,
    sum_3_5,
    sum_3_6,
    verify_theorem3,
    verify_theorem4,
    verify_theorem5,
)


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("size", [2, 4])
def test_even_split_identity(n, size):
    for T in combinations(range(1, 6), size):
        assert verify_theorem3(T, n), (T, n)


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("size", [1, 3])
def test_odd_split_identity(n, size):
    for T in combinations(range(1, 6), size):
        assert verify_theorem4(T, n), (T, n)


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("m,d", [(0, 2), (1, 0), (1, 2), (0, 3), (1, 3), (2, 2)])
def test_general_d_identity(n, m, d):
    size = 2 * m + d
    for T in combinations(range(1, 6), size):
        assert verify_theorem5(T, n, d), (T, n, d)


def test_split_identity_specific_value():
    # T = {1,2}, one variable: both sides are 2 x^3
    lhs = lhs_theorem3((1, 2), 1)
    assert lhs == rhs_theorem3((1, 2), 1)
    assert lhs.evaluate([2]) == 16


def test_theorem5_reduces_to_theorem3():
    for T in combinations(range(1, 6), 4):
        assert lhs_theorem5(T, 2, 0) == lhs_theorem3(T, 2)
        assert rhs_theorem5(T, 2, 0) == rhs_theorem3(T, 2)


def test_index_set_errors():
    with pytest.raises(ValueError):
        verify_theorem4((1, 2), 1)  # even size where odd is required
    with pytest.raises(ValueError):
        verify_theorem5((1, 2, 3), 1, 0)  # parity mismatch with d


GRID = [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(7, 3)]


@pytest.mark.parametrize("m", range(0, 5))
@pytest.mark.parametrize("s", range(0, 4))
def test_hypergeometric_sum(m, s):
    for x in GRID:
        for y in GRID:
            assert sum_3_5(x, y, m, s) == closed_3_5(x, y, m, s), (x, y, m, s)


@pytest.mark.parametrize("m", range(0, 4))
@pytest.mark.parametrize("s", range(0, 3))
@pytest.mark.parametrize("q", [Fraction(2), Fraction(1, 2), Fraction(3)])
def test_q_hypergeometric_sum(m, s, q):
    for x in (Fraction(1, 2), Fraction(2), Fraction(5, 3)):
        for y in (Fraction(1, 3), Fraction(3)):
            assert sum_3_6(x, y, q, m, s) == closed_3_6(x, y, q, m, s), (x, y, q, m, s)


def test_sum_vanishes_above_range():
    assert sum_3_5(Fraction(1, 2), Fraction(3, 2), 2, 4) == 0
    assert closed_3_5(Fraction(1, 2), Fraction(3, 2), 2, 4) == 0
