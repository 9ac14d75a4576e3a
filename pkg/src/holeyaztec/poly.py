"""Dense-exponent multivariate polynomials with exact integer coefficients.

Terms are stored as a dict mapping exponent tuples (one entry per variable)
to nonzero integer coefficients.  Equality is structural, which is what the
identity checks in this package rely on.
"""

from __future__ import annotations

from fractions import Fraction


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for expo, coeff in terms.items():
                if len(expo) != nvars:
                    raise ValueError(f"exponent {expo} has wrong length for {nvars} vars")
                if coeff != 0:
                    self.terms[tuple(expo)] = self.terms.get(tuple(expo), 0) + coeff
            self.terms = {e: c for e, c in self.terms.items() if c != 0}

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, c, nvars):
        p = cls(nvars)
        if c != 0:
            p.terms[(0,) * nvars] = c
        return p

    @classmethod
    def variable(cls, i, nvars):
        """The monomial x_i (0-based index)."""
        expo = [0] * nvars
        expo[i] = 1
        p = cls(nvars)
        p.terms[tuple(expo)] = 1
        return p

    @classmethod
    def monomial(cls, expo, coeff=1):
        p = cls(len(expo))
        if coeff != 0:
            p.terms[tuple(expo)] = coeff
        return p

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly.constant(other, self.nvars)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        p = Poly(self.nvars)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = Poly(self.nvars)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly.constant(other, self.nvars)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            p = Poly(self.nvars)
            if other != 0:
                p.terms = {e: c * other for e, c in self.terms.items()}
            return p
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        p = Poly(self.nvars)
        p.terms = out
        return p

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.constant(other, self.nvars)
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def embed(self, nvars, offset=0):
        """View this polynomial in a larger variable set, x_i -> x_{i+offset}."""
        if offset + self.nvars > nvars:
            raise ValueError("embedding does not fit")
        pad_after = nvars - offset - self.nvars
        p = Poly(nvars)
        p.terms = {
            (0,) * offset + e + (0,) * pad_after: c for e, c in self.terms.items()
        }
        return p

    def permuted(self, perm):
        """Apply the variable permutation x_i -> x_{perm[i]}."""
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError("not a permutation")
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for i, p in enumerate(perm):
                ne[p] = e[i]
            out[tuple(ne)] = c
        p = Poly(self.nvars)
        p.terms = out
        return p

    def evaluate(self, values):
        """Evaluate at exact rationals; returns a Fraction."""
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        vals = [Fraction(v) for v in values]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = Fraction(c)
            for v, k in zip(vals, e):
                t *= v**k
            total += t
        return total

    def canonical(self):
        """Canonical text form: terms in lexicographic exponent order."""
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}"
                for i, k in enumerate(e)
                if k
            )
            if mono:
                pieces.append(f"{c}*{mono}" if c != 1 else mono)
            else:
                pieces.append(str(c))
        return " + ".join(pieces)

    def __repr__(self):
        return f"Poly({self.nvars}, {self.canonical()!r})"
