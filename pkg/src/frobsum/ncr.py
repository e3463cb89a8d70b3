"""Numerical witness for the noncommutative-resolution property.

Builds the matrix of Hilbert series of Hom spaces among the covariant modules
of tilting type (weights 0..n-3) and the kernel-module invariants (indices
1..n-3), inverts it over exact rationals modulo t^(D+1), and tests that the
inverse is polynomial up to a guard band.  Entries are computed in the
characteristic-free regime (tilting = induced), so the matrix does not depend
on p.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .characters import weyl_char
from .series import TruncSeries
from .hilbert import char_K, char_S_degree, _invariant_dim_times


class NegativeEntryError(ArithmeticError):
    """A Hom Hilbert coefficient came out negative, falsifying the vanishing
    assumption behind the Euler-characteristic formulas."""


class SingularConstantTermError(ZeroDivisionError):
    """The constant-term matrix is singular over the rationals."""


@dataclass
class HomMatrix:
    n: int
    trunc: int
    labels: list                 # ("T", i) for 0..n-3 then ("K", j) for 1..n-3
    entries: list                # square array of integer TruncSeries


def module_labels(n: int) -> list:
    return [("T", i) for i in range(n - 2)] + [("K", j) for j in range(1, n - 2)]


def hom_entry(n: int, src, dst, trunc: int) -> TruncSeries:
    """Hilbert series of the graded Homs from src to dst, where each side is
    ("T", i) (covariants of the weight-i induced module) or ("K", j)
    (invariants of the j-th kernel module)."""
    kind_s, a = src
    kind_d, b = dst
    if kind_s == "T" and kind_d == "T":
        m = weyl_char(a) * weyl_char(b)
        coeffs = [_invariant_dim_times(m, char_S_degree(n, d))
                  for d in range(trunc + 1)]
    elif kind_s == "T" and kind_d == "K":
        wa = weyl_char(a)
        coeffs = [_invariant_dim_times(wa, char_K(n, b, d))
                  for d in range(trunc + 1)]
    elif kind_s == "K" and kind_d == "T":
        # dualize the source: the dual of the a-th kernel module is the
        # (n-a-2)-nd one twisted down by 2
        wb = weyl_char(b)
        coeffs = [_invariant_dim_times(wb, char_K(n, n - a - 2, d - 2))
                  for d in range(trunc + 1)]
    elif kind_s == "K" and kind_d == "K":
        # Euler characteristic over the dualized free resolution of the source
        coeffs = []
        for d in range(trunc + 1):
            total = 0
            for i in range(n - a - 1):
                val = comb(n, a + 2 + i) * _invariant_dim_times(
                    weyl_char(i), char_K(n, b, d + i))
                total += val if i % 2 == 0 else -val
            coeffs.append(total)
    else:
        raise ValueError(f"unknown labels {src}, {dst}")
    for d, cval in enumerate(coeffs):
        if cval < 0:
            raise NegativeEntryError(
                f"Hom({src}, {dst}) coefficient {cval} at degree {d} (n={n})")
    return TruncSeries(coeffs, trunc)


def hom_hilbert_matrix(n: int, trunc: int) -> HomMatrix:
    """The full Hom Hilbert matrix for the 2n-5 candidate summands."""
    if n < 5:
        raise ValueError(f"matrix form needs n >= 5 (size 2n-5 >= 5), got {n}")
    if trunc < 1:
        raise ValueError("truncation degree must be >= 1")
    labels = module_labels(n)
    entries = [[hom_entry(n, src, dst, trunc) for dst in labels] for src in labels]
    for i in range(len(labels)):
        if entries[i][i][0] != 1:
            raise NegativeEntryError(
                f"diagonal constant term {entries[i][i][0]} != 1 at {labels[i]}")
    return HomMatrix(n=n, trunc=trunc, labels=labels, entries=entries)


def _mat_mul(A, B):
    size = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(size)) for j in range(size)]
            for i in range(size)]


def _invert_rational(M):
    size = len(M)
    A = [[Fraction(M[i][j]) for j in range(size)] for i in range(size)]
    I = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for col in range(size):
        piv = next((r for r in range(col, size) if A[r][col] != 0), None)
        if piv is None:
            raise SingularConstantTermError(
                f"constant-term matrix singular at column {col}")
        A[col], A[piv] = A[piv], A[col]
        I[col], I[piv] = I[piv], I[col]
        inv = Fraction(1) / A[col][col]
        A[col] = [v * inv for v in A[col]]
        I[col] = [v * inv for v in I[col]]
        for r in range(size):
            f = A[r][col]
            if r != col and f:
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
                I[r] = [x - f * y for x, y in zip(I[r], I[col])]
    return I


def invert_truncated_matrix(H: HomMatrix, trunc: int | None = None) -> list:
    """Inverse of the series matrix modulo t^(trunc+1), as a square array of
    TruncSeries with exact rational coefficients (integers collapse to ints
    when the constant-term inverse is integral)."""
    D = H.trunc if trunc is None else min(trunc, H.trunc)
    size = len(H.labels)
    Hd = [[[H.entries[i][j][d] for j in range(size)] for i in range(size)]
          for d in range(D + 1)]
    C0inv = _invert_rational(Hd[0])
    if all(v.denominator == 1 for row in C0inv for v in row):
        C0inv = [[int(v) for v in row] for row in C0inv]
    X = [C0inv]
    for d in range(1, D + 1):
        acc = [[0] * size for _ in range(size)]
        for e in range(1, d + 1):
            He = Hd[e]
            Xde = X[d - e]
            for i in range(size):
                Hei = He[i]
                acci = acc[i]
                for k in range(size):
                    h = Hei[k]
                    if h:
                        Xk = Xde[k]
                        for j in range(size):
                            acci[j] += h * Xk[j]
        neg = [[-v for v in row] for row in acc]
        X.append(_mat_mul(C0inv, neg))
    return [[TruncSeries([X[d][i][j] for d in range(D + 1)], D)
             for j in range(size)] for i in range(size)]


def product_check(H: HomMatrix, Hinv: list, trunc: int | None = None):
    """First degree where H * Hinv differs from the identity, or None."""
    D = H.trunc if trunc is None else min(trunc, H.trunc)
    size = len(H.labels)
    for i in range(size):
        for j in range(size):
            prod = TruncSeries.zero(D)
            for k in range(size):
                prod = prod + H.entries[i][k] * Hinv[k][j]
            target = TruncSeries.monomial(1, 0, D) if i == j else TruncSeries.zero(D)
            diff = prod.first_difference(target)
            if diff is not None:
                return (i, j, diff)
    return None


@dataclass
class NcrReport:
    n: int
    trunc: int
    guard: int
    labels: list
    entry_max_degree: list       # per entry: max nonzero degree or None
    entry_polynomial: list       # per entry: no support in (trunc-guard, trunc]
    non_integral: list           # entries with non-integer coefficients
    product_ok: bool
    product_detail: str = ""

    @property
    def polynomial(self) -> bool:
        return all(all(row) for row in self.entry_polynomial)

    @property
    def max_degree(self):
        degs = [d for row in self.entry_max_degree for d in row if d is not None]
        return max(degs) if degs else None

    @property
    def ok(self) -> bool:
        return self.polynomial and self.product_ok and not self.non_integral


def polynomiality_report(H: HomMatrix, Hinv: list, guard: int | None = None) -> NcrReport:
    """Guard-band polynomiality verdict for the inverse matrix: an entry
    counts as polynomial iff its coefficients vanish on (D-guard, D]."""
    D = H.trunc
    g = guard if guard is not None else D // 4
    if not 0 < g < D:
        raise ValueError(f"guard must satisfy 0 < guard < D, got {g} vs {D}")
    size = len(H.labels)
    max_deg = [[Hinv[i][j].max_nonzero_degree() for j in range(size)]
               for i in range(size)]
    poly = [[max_deg[i][j] is None or max_deg[i][j] <= D - g
             for j in range(size)] for i in range(size)]
    non_integral = sorted(
        (H.labels[i], H.labels[j])
        for i in range(size) for j in range(size)
        if any(isinstance(cv, Fraction) and cv.denominator != 1
               for cv in Hinv[i][j].coeffs))
    bad = product_check(H, Hinv)
    return NcrReport(
        n=H.n, trunc=D, guard=g, labels=H.labels,
        entry_max_degree=max_deg, entry_polynomial=poly,
        non_integral=non_integral,
        product_ok=bad is None,
        product_detail="OK" if bad is None else
        f"H*Hinv differs from identity at entry {bad[:2]}, degree {bad[2]}")
