"""Exact arithmetic primitives and index-set/partition bookkeeping.

Everything here works over Python's arbitrary-precision integers and
``fractions.Fraction``; no floating point is used anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial


class IntegralityError(ArithmeticError):
    """A quantity that must be an exact integer failed to be one."""


class HypothesisError(ValueError):
    """A theorem evaluator was called with parameters violating its hypotheses."""


def check_index_set(elements):
    """Return ``elements`` as a tuple after validating strict increase and positivity."""
    elems = tuple(int(a) for a in elements)
    if any(a < 1 for a in elems):
        raise ValueError(f"index set elements must be >= 1, got {elems}")
    if any(b <= a for a, b in zip(elems, elems[1:])):
        raise ValueError(f"index set must be strictly increasing, got {elems}")
    return elems


def check_partition(parts):
    """Return ``parts`` as a tuple with trailing zeros trimmed, validating monotonicity."""
    ps = tuple(int(p) for p in parts)
    if any(p < 0 for p in ps):
        raise ValueError(f"partition parts must be nonnegative, got {ps}")
    if any(q > p for p, q in zip(ps, ps[1:])):
        raise ValueError(f"partition parts must be weakly decreasing, got {ps}")
    while ps and ps[-1] == 0:
        ps = ps[:-1]
    return ps


def partition_from_index_set(A):
    """Partition attached to a strictly increasing index set.

    For A = {a_1 < ... < a_m} the j-th part is a_{m+1-j} - (m - j), i.e. the
    set is read back to front and the staircase (m-1, ..., 1, 0) subtracted.
    """
    a = check_index_set(A)
    m = len(a)
    return check_partition(tuple(a[m - j] - (m - j) for j in range(1, m + 1)))


def shifted_factorial(a, k):
    """Rising product a(a+1)...(a+k-1); empty product for k = 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


def q_shifted_factorial(a, q, k):
    """Product (1-a)(1-aq)...(1-aq^{k-1}); empty product for k = 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a, q = Fraction(a), Fraction(q)
    out = Fraction(1)
    p = a
    for _ in range(k):
        out *= 1 - p
        p *= q
    return out


def vandermonde_quotient(a):
    """prod_{i<j} (a_j - a_i) / prod_i (i-1)! as an exact integer.

    This is the principal specialization of the Schur polynomial attached to
    the index set, so the division is always exact; a failure indicates a bug.
    """
    a = check_index_set(a)
    m = len(a)
    num = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= a[j] - a[i]
    den = 1
    for i in range(1, m + 1):
        den *= factorial(i - 1)
    q, r = divmod(num, den)
    if r != 0:
        raise IntegralityError(f"{num}/{den} is not an integer for index set {a}")
    return q


# Alias under the name the rest of the package uses for the Schur specialization.
vandermonde_specialization = vandermonde_quotient


def as_integer(x, context=""):
    """Convert an exact rational known to be integral to int, or raise."""
    x = Fraction(x)
    if x.denominator != 1:
        where = f" in {context}" if context else ""
        raise IntegralityError(f"expected an integer{where}, got {x}")
    return x.numerator


def binom2(n):
    """n(n-1)/2, valid for any integer n (matches the generalized binomial)."""
    return n * (n - 1) // 2
