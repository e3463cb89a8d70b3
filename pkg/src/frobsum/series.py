"""Exact truncated power series.

Coefficients are arbitrary-precision integers (Fractions also work: the
arithmetic is ring-agnostic).  A series knows its truncation degree D and all
operations are exact modulo t^(D+1); asking for a coefficient beyond D fails
loudly instead of returning silently wrong data.
"""

from functools import lru_cache
from math import comb


class TruncSeries:
    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs, trunc):
        if trunc < 0:
            raise ValueError("truncation degree must be >= 0")
        cc = list(coeffs)
        if len(cc) > trunc + 1:
            cc = cc[: trunc + 1]
        else:
            cc.extend([0] * (trunc + 1 - len(cc)))
        self.coeffs = cc
        self.trunc = trunc

    @classmethod
    def zero(cls, trunc):
        return cls([], trunc)

    @classmethod
    def one(cls, trunc):
        return cls([1], trunc)

    @classmethod
    def monomial(cls, c, d, trunc):
        cc = [0] * (d + 1) if d <= trunc else []
        if d <= trunc:
            cc[d] = c
        return cls(cc, trunc)

    def __getitem__(self, d):
        if d < 0:
            return 0
        if d > self.trunc:
            raise IndexError(
                f"coefficient of t^{d} requested beyond truncation degree {self.trunc}")
        return self.coeffs[d]

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        D = min(self.trunc, other.trunc)
        return self.coeffs[: D + 1] == other.coeffs[: D + 1]

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        D = min(self.trunc, other.trunc)
        return TruncSeries(
            [self.coeffs[d] + other.coeffs[d] for d in range(D + 1)], D)

    def __sub__(self, other):
        D = min(self.trunc, other.trunc)
        return TruncSeries(
            [self.coeffs[d] - other.coeffs[d] for d in range(D + 1)], D)

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.trunc)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries([c * other for c in self.coeffs], self.trunc)
        D = min(self.trunc, other.trunc)
        out = [0] * (D + 1)
        for d1, c1 in enumerate(self.coeffs[: D + 1]):
            if not c1:
                continue
            for d2 in range(D + 1 - d1):
                c2 = other.coeffs[d2]
                if c2:
                    out[d1 + d2] += c1 * c2
        return TruncSeries(out, D)

    __rmul__ = __mul__

    def shift(self, c: int):
        """Multiply by t^c (c >= 0), same truncation."""
        if c < 0:
            raise ValueError("shift must be >= 0")
        return TruncSeries([0] * c + self.coeffs, self.trunc)

    def substitute_power(self, k: int):
        """Substitute t -> t^k, same truncation."""
        if k < 1:
            raise ValueError("substitution power must be >= 1")
        out = [0] * (self.trunc + 1)
        for d, c in enumerate(self.coeffs):
            if c and d * k <= self.trunc:
                out[d * k] = c
        return TruncSeries(out, self.trunc)

    def max_nonzero_degree(self):
        for d in range(self.trunc, -1, -1):
            if self.coeffs[d]:
                return d
        return None

    def first_difference(self, other):
        """Least degree where the two series differ, or None if equal."""
        D = min(self.trunc, other.trunc)
        for d in range(D + 1):
            if self.coeffs[d] != other.coeffs[d]:
                return d
        return None

    def __repr__(self):
        terms = [f"{c}*t^{d}" for d, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms[:8]) or "0"
        if len(terms) > 8:
            body += " + ..."
        return f"TruncSeries({body}; D={self.trunc})"


@lru_cache(maxsize=None)
def geometric_power(k: int, e: int, trunc: int) -> TruncSeries:
    """(1 - t^k)^(-e) truncated: coefficient of t^(k*j) is C(e-1+j, j)."""
    out = [0] * (trunc + 1)
    j = 0
    while k * j <= trunc:
        out[k * j] = comb(e - 1 + j, j)
        j += 1
    return TruncSeries(out, trunc)
