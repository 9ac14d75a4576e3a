"""Schur-function product identities and their hypergeometric specialisations.

The polynomial identities are verified by exact coefficient comparison; the
hypergeometric summation identities are evaluated over ``fractions.Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

from .exact import (
    check_index_set,
    partition_from_index_set,
    q_shifted_factorial,
    shifted_factorial,
)
from .poly import Poly
from .schur import schur_polynomial


def _schur_of_set(index_set, nvars):
    return schur_polynomial(partition_from_index_set(index_set), nvars)


def _split_pairs(T, size_a):
    """All ordered splits of T into disjoint (A, B) with |A| = size_a."""
    T = tuple(T)
    for A in combinations(T, size_a):
        a_set = set(A)
        B = tuple(t for t in T if t not in a_set)
        yield A, B


def lhs_theorem3(T, n):
    """Sum of s_{lambda(A)} s_{lambda(B)} over equal-size splits of T."""
    T = check_index_set(T)
    if len(T) % 2 != 0:
        raise ValueError(f"index set size must be even, got {len(T)}")
    m = len(T) // 2
    total = Poly.zero(n)
    for A, B in _split_pairs(T, m):
        total = total + _schur_of_set(A, n) * _schur_of_set(B, n)
    return total


def rhs_theorem3(T, n):
    """2^m s_{lambda(even-indexed t)} s_{lambda(odd-indexed t)}."""
    T = check_index_set(T)
    if len(T) % 2 != 0:
        raise ValueError(f"index set size must be even, got {len(T)}")
    m = len(T) // 2
    evens = T[1::2]
    odds = T[0::2]
    return _schur_of_set(evens, n) * _schur_of_set(odds, n) * (2 ** m)


def verify_theorem3(T, n):
    return lhs_theorem3(T, n) == rhs_theorem3(T, n)


def lhs_theorem5(T, n, d):
    """Sum of s_{lambda(A)}(X_n) s_{lambda(B)}(X_{n+d}) over splits |A| = m.

    Both factors are compared in n+d variables; the A-side factor does not
    involve the last d of them.
    """
    T = check_index_set(T)
    if d < 0:
        raise ValueError("d must be nonnegative")
    if (len(T) - d) % 2 != 0 or len(T) < d:
        raise ValueError(f"index set size {len(T)} incompatible with d={d}")
    m = (len(T) - d) // 2
    total = Poly.zero(n + d)
    for A, B in _split_pairs(T, m):
        total = total + _schur_of_set(A, n).embed(n + d) * _schur_of_set(B, n + d)
    return total


def rhs_theorem5(T, n, d):
    """Floor(d/2)-fold sum moving selected even-indexed values to the odd set.

    For each 1 <= k_1 < ... < k_{floor(d/2)} <= m + floor(d/2) the summand is
    s over the even-indexed values of T with the t_{2k_i} removed (in X_n)
    times s over the odd-indexed values with the t_{2k_i} adjoined (in
    X_{n+d}), all scaled by 2^m.
    """
    T = check_index_set(T)
    if d < 0:
        raise ValueError("d must be nonnegative")
    if (len(T) - d) % 2 != 0 or len(T) < d:
        raise ValueError(f"index set size {len(T)} incompatible with d={d}")
    m = (len(T) - d) // 2
    h = d // 2
    evens = T[1::2]
    odds = T[0::2]
    total = Poly.zero(n + d)
    for ks in combinations(range(1, m + h + 1), h):
        moved = tuple(evens[k - 1] for k in ks)
        kept = tuple(t for t in evens if t not in set(moved))
        enlarged = tuple(sorted(odds + moved))
        total = total + (
            _schur_of_set(kept, n).embed(n + d)
            * _schur_of_set(enlarged, n + d)
            * (2 ** m)
        )
    return total


def verify_theorem5(T, n, d):
    return lhs_theorem5(T, n, d) == rhs_theorem5(T, n, d)


def lhs_theorem4(T, n):
    """d = 1 member of the family: splits with |B| = |A| + 1."""
    return lhs_theorem5(T, n, 1)


def rhs_theorem4(T, n):
    """2^m s_{lambda(t_even)}(X_n) s_{lambda(t_odd)}(X_{n+1})."""
    return rhs_theorem5(T, n, 1)


def verify_theorem4(T, n):
    """Exact equality of the two sides for an odd-size index set."""
    T = check_index_set(T)
    if len(T) % 2 != 1:
        raise ValueError(f"index set size must be odd, got {len(T)}")
    return lhs_theorem4(T, n) == rhs_theorem4(T, n)


def sum_3_5(x, y, m, s):
    """Multiple shifted-factorial sum; 0 when s > m+1 (empty index range)."""
    x, y = Fraction(x), Fraction(y)
    total = Fraction(0)
    for ks in combinations(range(m + 1), s):
        term = Fraction(1)
        for i in range(s):
            for j in range(i + 1, s):
                term *= (ks[j] - ks[i]) ** 2
        for k in ks:
            term *= shifted_factorial(x, k) * shifted_factorial(y, m - k)
            term /= shifted_factorial(1, k) * shifted_factorial(1, m - k)
        total += term
    return total


def closed_3_5(x, y, m, s):
    """Product form of ``sum_3_5``; 0 when s > m+1."""
    if s > m + 1:
        return Fraction(0)
    x, y = Fraction(x), Fraction(y)
    out = Fraction(1)
    for i in range(1, s + 1):
        out *= shifted_factorial(x, i - 1) * shifted_factorial(y, i - 1)
        out *= shifted_factorial(x + y + i + s - 2, m - s + 1)
        out *= Fraction(shifted_factorial(1, i - 1), shifted_factorial(1, m - i + 1))
    return out


def sum_3_6(x, y, q, m, s):
    """q-analogue of ``sum_3_5``; exact over Fractions, 0 when s > m+1."""
    x, y, q = Fraction(x), Fraction(y), Fraction(q)
    if q == 0:
        raise ZeroDivisionError("q must be nonzero")
    total = Fraction(0)
    for ks in combinations(range(m + 1), s):
        term = y ** sum(ks)
        for i in range(s):
            for j in range(i + 1, s):
                term *= (q ** ks[j] - q ** ks[i]) ** 2
        for k in ks:
            term *= q_shifted_factorial(x, q, k) * q_shifted_factorial(y, q, m - k)
            den = q_shifted_factorial(q, q, k) * q_shifted_factorial(q, q, m - k)
            if den == 0:
                raise ZeroDivisionError(f"(q;q) factor vanishes at q={q}")
            term /= den
        total += term
    return total


def closed_3_6(x, y, q, m, s):
    """Product form of ``sum_3_6``; 0 when s > m+1."""
    if s > m + 1:
        return Fraction(0)
    x, y, q = Fraction(x), Fraction(y), Fraction(q)
    out = q ** (2 * comb(s, 3)) * y ** comb(s, 2)
    for i in range(1, s + 1):
        out *= q_shifted_factorial(x, q, i - 1) * q_shifted_factorial(y, q, i - 1)
        out *= q_shifted_factorial(x * y * q ** (i + s - 2), q, m - s + 1)
        den = q_shifted_factorial(q, q, m - i + 1)
        if den == 0:
            raise ZeroDivisionError(f"(q;q) factor vanishes at q={q}")
        out *= Fraction(q_shifted_factorial(q, q, i - 1), den)
    return out
