"""The SL_2 fusion ring at level p-2 and its graded powers.

Simple objects are indexed by alcove weights 0..p-2.  A graded multiset of
simples is a plain dict (q, d) -> multiplicity.  The aggregate polynomials
returned by a_polynomials index the non-free part of the Frobenius
decomposition; tableau_count is an independent counting oracle used by the
test suite.
"""

from dataclasses import dataclass
from functools import lru_cache

from .series import TruncSeries
from .characters import tensor_decompose_simples


@dataclass(frozen=True)
class APolynomials:
    """Degree generating functions of the alcove-extreme fusion multiplicities:
    a0 collects weight 0, a_p2 collects weight p-2 (they coincide for p = 2)."""

    a0: TruncSeries
    a_p2: TruncSeries


def fusion_product(p: int, q1: int, q2: int) -> dict:
    """Fusion product of two simples of the level p-2 fusion category,
    as an ungraded multiset {(q, 0): mult}."""
    if not (0 <= q1 <= p - 2 and 0 <= q2 <= p - 2):
        raise ValueError(f"alcove weights must lie in [0, p-2], got ({q1}, {q2})")
    full = tensor_decompose_simples(p, q1, q2)
    return {(m, 0): c for m, c in full.items() if m <= p - 2}


@lru_cache(maxsize=None)
def _fusion_pair(p: int, q1: int, q2: int) -> tuple:
    a, b = max(q1, q2), min(q1, q2)
    return tuple(sorted((q, c) for (q, _), c in fusion_product(p, a, b).items()))


def _multiset_product(p, left, right):
    out = {}
    for (q1, d1), c1 in left.items():
        for (q2, d2), c2 in right.items():
            c12 = c1 * c2
            d = d1 + d2
            for q, c in _fusion_pair(p, q1, q2):
                key = (q, d)
                out[key] = out.get(key, 0) + c12 * c
    return out


def graded_fusion_power(p: int, n: int) -> dict:
    """n-th fusion power of the seed sum_{j=0}^{p-2} L(j) t^j, computed by
    iterated binary products on aggregated multisets.

    Entry (q, d) is the total multiplicity of the simple of weight q among
    degree-d products, i.e. summed over all weight tuples (i_1..i_n) in
    [0,p-2]^n with i_1+...+i_n = d.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    seed = {(j, j): 1 for j in range(p - 1)}
    # binary powering keeps the number of big products at O(log n)
    result = None
    base = seed
    e = n
    while e:
        if e & 1:
            result = base if result is None else _multiset_product(p, result, base)
        e >>= 1
        if e:
            base = _multiset_product(p, base, base)
    return result


def a_polynomials(p: int, n: int, trunc: int | None = None) -> APolynomials:
    """Collect the weight-0 and weight-(p-2) rows of graded_fusion_power as
    polynomials in the degree variable."""
    power = graded_fusion_power(p, n)
    D = trunc if trunc is not None else n * (p - 2) if p > 2 else 0
    a0 = [0] * (D + 1)
    a_p2 = [0] * (D + 1)
    for (q, d), c in power.items():
        if d > D:
            continue
        if q == 0:
            a0[d] += c
        if q == p - 2:
            a_p2[d] += c
    return APolynomials(TruncSeries(a0, D), TruncSeries(a_p2, D))


def tableau_count(p: int, weights: tuple, q: int) -> int:
    """Count two-row semi-standard Young tableaux of weight (i_1..i_k) and
    shape (l1, l2) with l1 - l2 = q, in which the boxes of each letter form a
    skew diagram of width <= p-2.

    This equals the multiplicity of the simple of weight q in the iterated
    fusion product of the L(i_j); enumeration is exponential-ish and meant
    for oracle-scale inputs only.
    """
    dist = tableau_distribution(p, weights)
    return dist.get(q, 0)


def tableau_distribution(p: int, weights: tuple) -> dict:
    """All q at once: map (l1 - l2) -> number of admissible tableaux."""
    if any(not 0 <= i <= p - 2 for i in weights):
        raise ValueError("tableau letters must carry alcove weights in [0, p-2]")
    # dynamic programming over letters; state = shape after placing 1..c
    states = {(0, 0): 1}
    for count in weights:
        nxt = {}
        for (l1, l2), ways in states.items():
            # r2 boxes of the current letter go to row 2, the rest to row 1;
            # column strictness forces the new row-2 boxes under old row-1 boxes
            for r2 in range(count + 1):
                n2 = l2 + r2
                n1 = l1 + count - r2
                if n2 > l1:
                    continue
                if n1 - l2 > p - 2:  # width of this letter's skew diagram
                    continue
                key = (n1, n2)
                nxt[key] = nxt.get(key, 0) + ways
        states = nxt
    out = {}
    for (l1, l2), ways in states.items():
        out[l1 - l2] = out.get(l1 - l2, 0) + ways
    return out


def fusion_power_of_tuple(p: int, weights: tuple) -> dict:
    """Fusion product L(i_1) x ... x L(i_k) as a map q -> multiplicity
    (degree-free); the direct bilinear computation the tableau oracle is
    checked against."""
    acc = {(0, 0): 1}
    for i in weights:
        acc = _multiset_product(p, acc, {(i, 0): 1})
    return {q: c for (q, _), c in acc.items()}
