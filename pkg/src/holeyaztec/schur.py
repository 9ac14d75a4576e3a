"""Schur and skew Schur polynomials by semistandard-tableau enumeration.

Two independent evaluation routes are provided: the tableau sum (the
definition used throughout) and the Jacobi-Trudi determinant in complete
homogeneous symmetric polynomials, kept as a cross-check oracle.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations

from .exact import check_partition, q_shifted_factorial
from .poly import Poly


def _iter_column_fillings(inner, outer, prev_row, n):
    """Fillings of one skew row: weakly increasing, strictly below prev_row.

    ``inner``/``outer`` delimit the cells [inner, outer) of this row;
    ``prev_row`` maps absolute column -> entry of the row above (or None).
    """
    row = [0] * outer

    def rec(col):
        if col == outer:
            yield tuple(row[inner:outer])
            return
        lo = 1
        if col > inner:
            lo = max(lo, row[col - 1])
        above = prev_row.get(col)
        if above is not None:
            lo = max(lo, above + 1)
        for v in range(lo, n + 1):
            row[col] = v
            yield from rec(col + 1)

    yield from rec(inner)


def _skew_tableau_poly(outer, inner, n):
    """Generating function of skew SSYT of shape outer/inner, entries <= n."""
    rows = len(outer)
    inner = tuple(inner) + (0,) * (rows - len(inner))
    result = Poly.zero(n)

    def rec(r, prev_row, expo):
        nonlocal result
        if r == rows:
            result = result + Poly.monomial(tuple(expo))
            return
        for filling in _iter_column_fillings(inner[r], outer[r], prev_row, n):
            for v in filling:
                expo[v - 1] += 1
            nxt = {inner[r] + i: v for i, v in enumerate(filling)}
            rec(r + 1, nxt, expo)
            for v in filling:
                expo[v - 1] -= 1

    rec(0, {}, [0] * n)
    return result


@lru_cache(maxsize=None)
def schur_polynomial(lam, n):
    """Schur polynomial s_lam in n variables; zero polynomial if len(lam) > n."""
    lam = check_partition(lam)
    if len(lam) > n:
        return Poly.zero(n)
    return _skew_tableau_poly(lam, (), n)


@lru_cache(maxsize=None)
def skew_schur_polynomial(outer, inner, n):
    """Skew Schur polynomial s_{outer/inner} in n variables."""
    outer = check_partition(outer)
    inner = check_partition(inner)
    if len(inner) > len(outer) or any(
        i > o for o, i in zip(outer, inner)
    ):
        raise ValueError(f"inner shape {inner} does not fit in outer {outer}")
    if len(outer) > n + len(inner):  # some row of length > 0 cannot be filled
        pass  # handled by enumeration producing zero
    return _skew_tableau_poly(outer, inner, n)


def ssyt_count(lam, n):
    """Number of semistandard tableaux of shape lam with entries <= n."""
    poly = schur_polynomial(check_partition(lam), n)
    return sum(poly.terms.values())


def rectangle_complement(mu, width, rows):
    """Complement of mu inside the rows x width rectangle, read upside down."""
    mu = check_partition(mu)
    if len(mu) > rows or (mu and mu[0] > width):
        raise ValueError(f"{mu} does not fit in a {rows}x{width} rectangle")
    full = mu + (0,) * (rows - len(mu))
    return check_partition(tuple(width - p for p in reversed(full)))


def partitions_inside(lam):
    """All partitions contained in lam, componentwise."""
    lam = check_partition(lam)
    if not lam:
        yield ()
        return

    def rec(i, prev, acc):
        if i == len(lam):
            yield check_partition(acc)
            return
        for p in range(min(lam[i], prev), -1, -1):
            yield from rec(i + 1, p, acc + [p])

    yield from rec(0, lam[0], [])


def verify_branching(lam, alpha, beta):
    """Check s_lam(x_1..x_a, y_1..y_b) = sum_mu s_{lam/mu}(x) s_mu(y) exactly."""
    lam = check_partition(lam)
    n = alpha + beta
    lhs = schur_polynomial(lam, n)
    rhs = Poly.zero(n)
    for mu in partitions_inside(lam):
        left = skew_schur_polynomial(lam, mu, alpha).embed(n, 0)
        right = schur_polynomial(mu, beta).embed(n, alpha)
        rhs = rhs + left * right
    return lhs == rhs


@lru_cache(maxsize=None)
def complete_homogeneous(k, n):
    """Complete homogeneous symmetric polynomial h_k in n variables."""
    if k < 0:
        return Poly.zero(n)
    p = Poly.zero(n)
    for combo in combinations_with_replacement(range(n), k):
        expo = [0] * n
        for i in combo:
            expo[i] += 1
        p = p + Poly.monomial(tuple(expo))
    return p


def jacobi_trudi_polynomial(lam, n):
    """det(h_{lam_i - i + j}) over 1 <= i, j <= len(lam), in n variables."""
    lam = check_partition(lam)
    ell = len(lam)
    if ell == 0:
        return Poly.constant(1, n)
    total = Poly.zero(n)
    for perm in permutations(range(ell)):
        sign = 1
        for i in range(ell):
            for j in range(i + 1, ell):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = Poly.constant(sign, n)
        for i in range(ell):
            prod = prod * complete_homogeneous(lam[i] - (i + 1) + (perm[i] + 1), n)
            if prod.is_zero():
                break
        total = total + prod
    return total


def jacobi_trudi_check(lam, n):
    """True iff the determinant route agrees with the tableau route."""
    return jacobi_trudi_polynomial(lam, n) == schur_polynomial(check_partition(lam), n)


def schur_principal_q(mu, K, L, q, s):
    """Product formula for s_mu(q^{K+1}, ..., q^{K+L}), mu padded to s parts.

    Validated against direct substitution into the tableau sum (see tests);
    raises ZeroDivisionError via Fraction when q makes a denominator vanish.
    """
    mu = check_partition(mu)
    if len(mu) > s:
        raise ValueError(f"{mu} has more than {s} parts")
    q = Fraction(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    mu = mu + (0,) * (s - len(mu))
    value = q ** (2 * _binom3(s + 1) + (K + 1) * sum(mu))
    for i in range(1, s + 1):
        for j in range(i + 1, s + 1):
            value *= q ** (mu[j - 1] - j) - q ** (mu[i - 1] - i)
    for i in range(1, s + 1):
        value *= q_shifted_factorial(q ** (L + 1 - i), q, mu[i - 1])
        den = q_shifted_factorial(q, q, mu[i - 1] - i + s)
        if den == 0:
            raise ZeroDivisionError(f"(q;q)_{mu[i - 1] - i + s} vanishes at q={q}")
        value /= den
    return value


def schur_at_q_powers(mu, K, L, q):
    """Direct substitution x_i = q^{K+i} into the tableau sum."""
    mu = check_partition(mu)
    q = Fraction(q)
    return schur_polynomial(mu, L).evaluate([q ** (K + i) for i in range(1, L + 1)])


def _binom3(n):
    return n * (n - 1) * (n - 2) // 6
