"""Closed-form and multi-sum evaluators for holey-rectangle matching counts.

Every evaluator works over exact rationals and asserts integrality of the
final value.  Each checks its stated parameter hypotheses; pass
``check=False`` to explore configurations outside them (the brute-force
oracle then arbitrates).

Two corrections to the printed sources are applied, both validated
exhaustively against the oracle (see the test suite): the arithmetic-
progression denominator uses C+D(i-1) rather than C+Di, and the geometric-
progression q-exponents are lowered by m(m+d-1) (resp. its mirror).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial

from .exact import HypothesisError, as_integer, binom2, check_index_set


def _pairdiff(vals):
    out = 1
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            out *= vals[j] - vals[i]
    return out


def _superfact(lo, hi):
    """Product of (i-1)! for i = lo..hi (inclusive); 1 when empty."""
    out = 1
    for i in range(lo, hi + 1):
        out *= factorial(i - 1)
    return out


def _require(cond, msg, check):
    if check and not cond:
        raise HypothesisError(msg)


def mrr_count(m, n, a):
    """Matchings of an m x n rectangle with only positions ``a`` of the top
    row surviving: 2^binom(m+1,2) prod (a_j - a_i) / prod (i-1)!."""
    a = check_index_set(a)
    if len(a) != m:
        raise ValueError(f"need {m} kept positions, got {len(a)}")
    if a and (a[-1] > n):
        raise ValueError(f"positions {a} exceed row length {n}")
    val = Fraction(2 ** binom2(m + 1) * _pairdiff(a), _superfact(1, m))
    return as_integer(val, "mrr_count")


def half_row_count(m, n, a):
    """Matchings of an m x n rectangle with the top row fully removed and
    the positions ``a`` of the second row removed: 2^binom(m,2) prod
    (a_j - a_i) / prod (i-1)!."""
    a = check_index_set(a)
    if len(a) != m:
        raise ValueError(f"need {m} removed positions, got {len(a)}")
    if a and (a[-1] > n + 1):
        raise ValueError(f"positions {a} exceed row length {n + 1}")
    val = Fraction(2 ** binom2(m) * _pairdiff(a), _superfact(1, m))
    return as_integer(val, "half_row_count")


def thm7(m, N, T, check=True):
    """Central-row holes, 2m x N rectangle, kept set T of size 2m."""
    T = check_index_set(T)
    _require(2 * m <= N, f"need 2m <= N, got m={m}, N={N}", check)
    if len(T) != 2 * m or (T and T[-1] > N):
        raise ValueError(f"T must be a 2m-subset of 1..N, got {T}")
    val = Fraction(
        2 ** (m * m + 2 * m) * _pairdiff(T[1::2]) * _pairdiff(T[0::2]),
        _superfact(1, m) ** 2,
    )
    return as_integer(val, "thm7")


def thm8(m, N, T, check=True):
    """Central-row holes, (2m-1) x N rectangle, kept set T of size 2N-2m+2."""
    T = check_index_set(T)
    _require(2 * m - 1 >= N, f"need 2m-1 >= N, got m={m}, N={N}", check)
    if len(T) != 2 * N - 2 * m + 2 or (T and T[-1] > N + 1):
        raise ValueError(f"T must be a (2N-2m+2)-subset of 1..N+1, got {T}")
    den = 1
    for t in T:
        den *= factorial(t - 1) * factorial(N + 1 - t)
    val = Fraction(
        2 ** (m * m - 2 * m + N + 1)
        * _superfact(m + 1, N + 1) ** 2
        * _pairdiff(T[1::2])
        * _pairdiff(T[0::2]),
        den,
    )
    return as_integer(val, "thm8")


def thm9(m, N, T, check=True):
    """Holes by 1 below centre, (2m+1) x N rectangle, kept T of size 2m+1."""
    T = check_index_set(T)
    _require(2 * m + 1 <= N, f"need 2m+1 <= N, got m={m}, N={N}", check)
    if len(T) != 2 * m + 1 or (T and T[-1] > N):
        raise ValueError(f"T must be a (2m+1)-subset of 1..N, got {T}")
    val = Fraction(
        2 ** (m * m + 3 * m + 1) * _pairdiff(T[1::2]) * _pairdiff(T[0::2]),
        _superfact(1, m) * _superfact(1, m + 1),
    )
    return as_integer(val, "thm9")


def thm10(m, N, T, check=True):
    """Holes by 1 below centre, 2m x N rectangle, kept T of size 2N-2m+1."""
    T = check_index_set(T)
    _require(2 * m >= N, f"need 2m >= N, got m={m}, N={N}", check)
    if len(T) != 2 * N - 2 * m + 1 or (T and T[-1] > N + 1):
        raise ValueError(f"T must be a (2N-2m+1)-subset of 1..N+1, got {T}")
    den = 1
    for t in T:
        den *= factorial(t - 1) * factorial(N + 1 - t)
    val = Fraction(
        2 ** (m * m - m + N)
        * _superfact(m + 1, N + 1)
        * _superfact(m + 2, N + 1)
        * _pairdiff(T[1::2])
        * _pairdiff(T[0::2]),
        den,
    )
    return as_integer(val, "thm10")


def _ksum(evens, odds, h):
    """The floor(d/2)-fold sum shared by the two multi-sum theorems.

    ``evens``/``odds`` are the even- and odd-indexed kept values; each
    selection k_1 < ... < k_h of even positions contributes the squared
    differences of the selected values times, for each selected value, the
    product of |distances to all odd values| over |distances to the other
    even values|.
    """
    total = Fraction(0)
    for ks in combinations(range(1, len(evens) + 1), h):
        term = Fraction(1)
        sel = [evens[k - 1] for k in ks]
        for i in range(h):
            for j in range(i + 1, h):
                term *= (sel[j] - sel[i]) ** 2
        for k, v in zip(ks, sel):
            num = 1
            for t in odds:
                num *= abs(v - t)
            den = 1
            for j, t in enumerate(evens, start=1):
                if j != k:
                    den *= abs(v - t)
            term *= Fraction(num, den)
        total += term
    return total


def thm11(m, N, d, T, check=True):
    """Holes by d below centre, (2m+d) x N rectangle, kept T of size 2m+d."""
    T = check_index_set(T)
    if d < 0:
        raise ValueError("d must be nonnegative")
    _require(2 * m + d <= N, f"need 2m+d <= N, got m={m}, d={d}, N={N}", check)
    if len(T) != 2 * m + d or (T and T[-1] > N):
        raise ValueError(f"T must be a (2m+d)-subset of 1..N, got {T}")
    evens, odds = T[1::2], T[0::2]
    val = (
        Fraction(
            2 ** (m * m + (d + 2) * m + binom2(d + 1)),
            _superfact(1, m) * _superfact(1, m + d),
        )
        * _pairdiff(evens)
        * _pairdiff(odds)
        * _ksum(evens, odds, d // 2)
    )
    return as_integer(val, "thm11")


def thm12(m, N, d, T, check=True):
    """Holes by d below centre, (2m+d-1) x N rectangle, kept set of size
    2N-2m-d+2."""
    T = check_index_set(T)
    if d < 0:
        raise ValueError("d must be nonnegative")
    _require(
        2 * m + d - 1 >= N, f"need 2m+d-1 >= N, got m={m}, d={d}, N={N}", check
    )
    if len(T) != 2 * N - 2 * m - d + 2 or (T and T[-1] > N + 1):
        raise ValueError(f"T must be a (2N-2m-d+2)-subset of 1..N+1, got {T}")
    evens, odds = T[1::2], T[0::2]
    den = 1
    for t in T:
        den *= factorial(t - 1) * factorial(N + 1 - t)
    val = (
        Fraction(
            2 ** (m * m + (d - 2) * m + binom2(d - 1) + N)
            * _superfact(m + 1, N + 1)
            * _superfact(m + d + 1, N + 1),
            den,
        )
        * _pairdiff(evens)
        * _pairdiff(odds)
        * _ksum(evens, odds, d // 2)
    )
    return as_integer(val, "thm12")


def arithmetic_kept(C, D, count):
    """Kept positions C, C+D, ..., C+(count-1)D."""
    return tuple(C + D * i for i in range(count))


def geometric_kept(C, D, q, count):
    """Kept positions C+D, C+Dq, ..., C+Dq^{count-1}; must all be integers."""
    C, D, q = Fraction(C), Fraction(D), Fraction(q)
    out = []
    for i in range(count):
        t = C + D * q ** i
        if t.denominator != 1:
            raise ValueError(f"position C+Dq^{i} = {t} is not an integer")
        out.append(t.numerator)
    return tuple(out)


def thm13(m, N, C, D, d, check=True):
    """Arithmetic-progression kept set in the (2m+d) x N case."""
    if check:
        _require(2 * m + d <= N, f"need 2m+d <= N, got m={m}, d={d}, N={N}", True)
        _require(
            C + (2 * m + d - 1) * D <= N,
            f"need C+(2m+d-1)D <= N, got C={C}, D={D}",
            True,
        )
        if C < 1 or D < 1:
            raise HypothesisError("C and D must be positive integers")
    return 2 ** binom2(2 * m + d + 1) * D ** (m * m + (d - 1) * m + binom2(d))


def thm14(m, N, C, D, d, check=True):
    """Arithmetic-progression kept set in the (2m+d-1) x N case.

    The validated hypotheses are 2m+d-1 >= N (the counting regime of the
    underlying multi-sum theorem) and N >= m+d-1 (the multi-sum is nonempty;
    below that the true count is 0); the kept positions are C+D(i-1).
    """
    if check:
        _require(
            2 * m + d - 1 >= N, f"need 2m+d-1 >= N, got m={m}, d={d}, N={N}", True
        )
        _require(
            N >= m + d - 1,
            f"need N >= m+d-1 (nonempty sum), got m={m}, d={d}, N={N}",
            True,
        )
        _require(
            C + (2 * N - 2 * m - d + 1) * D <= N + 1,
            f"need C+(2N-2m-d+1)D <= N+1, got C={C}, D={D}",
            True,
        )
        if C < 1 or D < 1:
            raise HypothesisError("C and D must be positive integers")
    size = 2 * N - 2 * m - d + 2
    den = 1
    for i in range(1, size + 1):
        t = C + D * (i - 1)
        den *= factorial(t - 1) * factorial(N + 1 - t)
    val = Fraction(
        2 ** (binom2(2 * m + d) + (N + 1) * (N - 2 * m - d + 1))
        * D ** (m * m + (d - 1) * m + binom2(d) + N * (N - 2 * m - d + 1))
        * _superfact(m + 1, N + 1)
        * _superfact(m + d + 1, N + 1)
        * _superfact(1, N - m + 1)
        * _superfact(1, N - m - d + 1),
        den,
    )
    return as_integer(val, "thm14")


def _abs_q2_superfact(q, count):
    """Product of |(q^2; q^2)_{i-1}| for i = 1..count, exact."""
    from .exact import q_shifted_factorial

    out = Fraction(1)
    for i in range(1, count + 1):
        out *= abs(q_shifted_factorial(q * q, q * q, i - 1))
    return out


def _neg_q_superfact(q, count):
    """Product of (-q; q)_{i-1} for i = 1..count, exact."""
    from .exact import q_shifted_factorial

    out = Fraction(1)
    for i in range(1, count + 1):
        out *= q_shifted_factorial(-q, q, i - 1)
    return out


def thm15(m, N, C, D, q, d, check=True):
    """Geometric-progression kept set in the (2m+d) x N case.

    The q-exponent is the printed one lowered by m(m+d-1): equal to
    (m+d-1)(4m^2+(2d-5)m+d(d-2))/6.
    """
    C, D, q = Fraction(C), Fraction(D), Fraction(q)
    T = geometric_kept(C, D, q, 2 * m + d)
    if check:
        _require(q > 1, f"need q > 1, got {q}", True)
        _require(2 * m + d <= N, f"need 2m+d <= N, got m={m}, d={d}, N={N}", True)
        _require(T[-1] <= N, f"largest kept position {T[-1]} exceeds N={N}", True)
        check_index_set(T)
    expo6 = (m + d - 1) * (4 * m * m + (2 * d - 5) * m + d * (d - 2))
    if expo6 % 6 != 0:
        raise ArithmeticError(f"q-exponent 6-divisibility failed: {expo6}")
    val = (
        Fraction(2 ** (m * m + (d + 2) * m + binom2(d + 1)))
        * D ** (m * m + (d - 1) * m + binom2(d))
        * q ** (expo6 // 6)
        * _abs_q2_superfact(q, m)
        * _abs_q2_superfact(q, m + d)
        / _neg_q_superfact(q, d)
        / (_superfact(1, m) * _superfact(1, m + d))
    )
    return as_integer(val, "thm15")


def thm16(m, N, C, D, q, d, check=True):
    """Geometric-progression kept set in the (2m+d-1) x N case.

    The q-exponent is the printed one lowered by m'(m'+d-1) for
    m' = N-m-d+1, mirroring the previous correction; the validated
    hypotheses are 2m+d-1 >= N and N >= m+d-1 (nonempty multi-sum).
    """
    C, D, q = Fraction(C), Fraction(D), Fraction(q)
    size = 2 * N - 2 * m - d + 2
    T = geometric_kept(C, D, q, size)
    if check:
        _require(q > 1, f"need q > 1, got {q}", True)
        _require(
            2 * m + d - 1 >= N, f"need 2m+d-1 >= N, got m={m}, d={d}, N={N}", True
        )
        _require(
            N >= m + d - 1,
            f"need N >= m+d-1 (nonempty sum), got m={m}, d={d}, N={N}",
            True,
        )
        if T:
            _require(
                T[-1] <= N + 1, f"largest kept position {T[-1]} exceeds N+1", True
            )
        check_index_set(T)
    mp = N - m - d + 1
    expo6 = (mp + d - 1) * (4 * mp * mp + (2 * d - 5) * mp + d * (d - 2))
    if expo6 % 6 != 0:
        raise ArithmeticError(f"q-exponent 6-divisibility failed: {expo6}")
    den = Fraction(1)
    for t in T:
        den *= factorial(t - 1) * factorial(N + 1 - t)
    val = (
        Fraction(
            2 ** (m * m + (d - 2) * m + binom2(d - 1) + N)
            * _superfact(m + 1, N + 1)
            * _superfact(m + d + 1, N + 1)
        )
        * D ** (m * m + (d - 1) * m + binom2(d) + N * (N - 2 * m - d + 1))
        * q ** (expo6 // 6)
        * _abs_q2_superfact(q, N - m + 1)
        * _abs_q2_superfact(q, N - m - d + 1)
        / _neg_q_superfact(q, d)
        / den
    )
    return as_integer(val, "thm16")


def dispatch(M, N, d, T, check=True):
    """Route a holey configuration on row M+1+d to the applicable theorem.

    The hole row keeps |row length - |M-N|| vertices; the parity of M-d
    selects between the two multi-sum families.
    """
    T = check_index_set(T)
    if d < 0 or d > M:
        raise ValueError(f"d must lie in [0, {M}], got {d}")
    row_len = N if (M + 1 + d) % 2 == 1 else N + 1
    if len(T) != row_len - abs(M - N):
        raise ValueError(
            f"kept set size {len(T)} != row length {row_len} minus |M-N| = "
            f"{abs(M - N)}"
        )
    if (M - d) % 2 == 0:
        m = (M - d) // 2
        return thm11(m, N, d, T, check=check)
    m = (M - d + 1) // 2
    return thm12(m, N, d, T, check=check)
