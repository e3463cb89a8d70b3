"""Brute-force Frobenius-kernel invariants of S over F_p.

An element of S_d is invariant under the first Frobenius kernel iff it is
killed by the raising and lowering derivations and its weight components are
congruent to 0 mod p.  The oracle assembles the two operator matrices on each
weight slice from monomial exponent vectors and computes the joint kernel
dimension by exact Gaussian elimination over F_p.

Monomials are ordered lexicographically, so the computation is deterministic.
The x <-> y substitution negates weights and swaps the two operators, hence
the slices at weight w and -w have equal kernel dimension and only w >= 0 is
eliminated.

Two elimination engines: packed bitsets for p = 2, and for odd p a blocked
right-looking elimination whose Schur updates run through float64 matmuls.
All float64 intermediates are integers bounded by the panel width times
(p-1)^2 plus a small drift, far below 2^53, so the arithmetic is exact.
"""

from functools import lru_cache
from math import comb

import numpy as np
from numba import njit

DEFAULT_BUDGET = 256 * 1024 * 1024  # notional dense-slice bytes (rows x cols)

_OUTER = 512   # outer panel width (Schur updates)
_INNER = 64    # inner panel width (scalar pivoting)


class BudgetExceededError(MemoryError):
    def __init__(self, attempted: int, budget: int, context: str = ""):
        self.attempted = attempted
        self.budget = budget
        super().__init__(
            f"slice needs {attempted} bytes, budget is {budget}"
            + (f" ({context})" if context else ""))


@lru_cache(maxsize=None)
def _compositions(n: int, total: int) -> tuple:
    """All exponent vectors of length n summing to total, lexicographic."""
    if n == 1:
        return ((total,),)
    out = []
    for first in range(total, -1, -1):
        for rest in _compositions(n - 1, total - first):
            out.append((first,) + rest)
    return tuple(out)


def weight_space_dim(n: int, d: int, w: int) -> int:
    if (d + w) % 2 or abs(w) > d:
        return 0
    a, b = (d + w) // 2, (d - w) // 2
    return comb(n + a - 1, n - 1) * comb(n + b - 1, n - 1)


def monomials(n: int, d: int, w: int) -> list:
    """Monomials of degree d and weight w as pairs (x-exponents, y-exponents),
    lexicographically ordered."""
    if (d + w) % 2 or abs(w) > d:
        return []
    a, b = (d + w) // 2, (d - w) // 2
    return [(xa, yb) for xa in _compositions(n, a) for yb in _compositions(n, b)]


def _operator_entries(n, p, sources, target_index, raising):
    """Sparse entries of the raising (x_i d/dy_i) or lowering (y_i d/dx_i)
    derivation on the given source monomials, as (row, col, value) triples."""
    entries = []
    for col, (xa, yb) in enumerate(sources):
        src, dst = (yb, xa) if raising else (xa, yb)
        for i in range(n):
            e = src[i]
            coeff = e % p
            if not coeff:
                continue
            new_dst = dst[:i] + (dst[i] + 1,) + dst[i + 1:]
            new_src = src[:i] + (e - 1,) + src[i + 1:]
            key = (new_dst, new_src) if raising else (new_src, new_dst)
            entries.append((target_index[key], col, coeff))
    return entries


# ---------------------------------------------------------------------------
# elimination engines


def rank_gf2(rows) -> int:
    """Rank over F_2 of a matrix given as an iterable of row bitmasks."""
    pivots = {}
    rank = 0
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = row
                rank += 1
                break
            row ^= piv
    return rank


def rank_mod_p_reference(matrix, p: int) -> int:
    """Plain row-echelon rank over F_p (test reference, small sizes only)."""
    rows = [[v % p for v in row] for row in matrix]
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        prow = [(v * inv) % p for v in rows[rank]]
        rows[rank] = prow
        for i in range(rank + 1, len(rows)):
            f = rows[i][col]
            if f:
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
        rank += 1
    return rank


@njit(cache=True)
def _rank_kernel(A, p, inv):  # pragma: no cover - exercised via rank_mod_p
    r, c = A.shape
    rank = 0
    for col0 in range(0, c, _OUTER):
        if rank >= r:
            break
        col1 = min(col0 + _OUTER, c)
        w = col1 - col0
        m = r - rank
        # float64 working copy of the outer panel below the finished rows;
        # values are exact small integers throughout, canonicalized to [0, p)
        # often enough that every product stays far below 2^53
        P = np.empty((m, w), np.float64)
        for i in range(m):
            for j in range(w):
                P[i, j] = A[rank + i, col0 + j]
        piv_cols = np.empty(w, np.int64)
        npiv = 0
        for in0 in range(0, w, _INNER):
            in1 = min(in0 + _INNER, w)
            base = npiv
            for lc in range(in0, in1):
                if npiv >= m:
                    break
                pr = -1
                for i in range(npiv, m):
                    if int(P[i, lc]) % p != 0:
                        pr = i
                        break
                if pr < 0:
                    continue
                if pr != npiv:
                    for j in range(w):
                        tmp = P[npiv, j]
                        P[npiv, j] = P[pr, j]
                        P[pr, j] = tmp
                    for j in range(c):  # trailing columns travel with the row
                        tmp8 = A[rank + npiv, j]
                        A[rank + npiv, j] = A[rank + pr, j]
                        A[rank + pr, j] = tmp8
                for j in range(lc, in1):
                    P[npiv, j] = int(P[npiv, j]) % p
                pinv = inv[int(P[npiv, lc])]
                for i in range(npiv + 1, m):
                    f = (int(P[i, lc]) % p) * pinv % p
                    P[i, lc] = f
                    if f:
                        for j in range(lc + 1, in1):
                            P[i, j] -= f * P[npiv, j]
                piv_cols[npiv] = lc
                npiv += 1
            nblk = npiv - base
            if nblk and in1 < w:
                # finish the block's pivot rows right of the inner panel
                # (canonicalize each source row at use: drift stays bounded)
                for t in range(nblk):
                    row = base + t
                    for j in range(in1, w):
                        P[row, j] = int(P[row, j]) % p
                    for i in range(row + 1, npiv):
                        f = P[i, piv_cols[row]]
                        if f:
                            for j in range(in1, w):
                                P[i, j] -= f * P[row, j]
                # push the block's elimination onto the rest of the outer panel
                if npiv < m:
                    L = np.empty((m - npiv, nblk), np.float64)
                    for i in range(m - npiv):
                        for t in range(nblk):
                            L[i, t] = P[npiv + i, piv_cols[base + t]]
                    U = np.ascontiguousarray(P[base:npiv, in1:w])
                    prod = np.dot(L, U)
                    for i in range(m - npiv):
                        for j in range(w - in1):
                            P[npiv + i, in1 + j] = int(
                                P[npiv + i, in1 + j] - prod[i, j]) % p
        k = npiv
        if k and col1 < c:
            # forward-substituted pivot rows over the trailing columns
            ct = c - col1
            U = np.empty((k, ct), np.float64)
            for i in range(k):
                for j in range(ct):
                    U[i, j] = A[rank + i, col1 + j]
            for t in range(k):
                for j in range(ct):
                    U[t, j] = int(U[t, j]) % p
                for i in range(t + 1, k):
                    f = P[i, piv_cols[t]]
                    if f:
                        for j in range(ct):
                            U[i, j] -= f * U[t, j]
            if rank + k < r:
                L = np.empty((m - k, k), np.float64)
                for i in range(m - k):
                    for t in range(k):
                        L[i, t] = P[k + i, piv_cols[t]]
                prod = np.dot(L, U)
                for i in range(m - k):
                    for j in range(ct):
                        A[rank + k + i, col1 + j] = int(
                            A[rank + k + i, col1 + j] - prod[i, j]) % p
        rank += k
    return rank


def rank_mod_p(A: np.ndarray, p: int) -> int:
    """Rank over F_p by two-level blocked Gaussian elimination; A (int8,
    entries in [0, p)) is destroyed.  Deterministic: pivots are the first
    nonzero residues in column-major order.  Schur complements go through
    BLAS float64 matmuls; every dot product is bounded by
    OUTER * (p-1)^2 << 2^53, so the arithmetic is exact."""
    r, c = A.shape
    if r == 0 or c == 0:
        return 0
    inv = np.array([0] + [pow(v, -1, p) for v in range(1, p)], dtype=np.int64)
    return int(_rank_kernel(A, p, inv))


# ---------------------------------------------------------------------------
# the oracle


def slice_kernel_dim(p: int, n: int, d: int, w: int,
                     budget: int = DEFAULT_BUDGET) -> int:
    """Joint kernel dimension of the raising and lowering operators on the
    weight-w slice of S_d, over F_p."""
    dim_src = weight_space_dim(n, d, w)
    if dim_src == 0:
        return 0
    dim_up = weight_space_dim(n, d, w + 2)
    dim_dn = weight_space_dim(n, d, w - 2)
    nbytes = (dim_up + dim_dn) * dim_src
    if nbytes > budget:
        raise BudgetExceededError(nbytes, budget, f"d={d}, weight {w}")
    sources = monomials(n, d, w)
    up_index = {mono: i for i, mono in enumerate(monomials(n, d, w + 2))}
    dn_index = {mono: i for i, mono in enumerate(monomials(n, d, w - 2))}
    up = _operator_entries(n, p, sources, up_index, raising=True)
    dn = _operator_entries(n, p, sources, dn_index, raising=False)
    if p == 2:
        rows = [0] * (dim_up + dim_dn)
        for row, col, _ in up:
            rows[row] |= 1 << col
        for row, col, _ in dn:
            rows[dim_up + row] |= 1 << col
        rank = rank_gf2(rows)
    else:
        A = np.zeros((dim_up + dim_dn, dim_src), dtype=np.int8)
        if up:
            rr, cc, vv = zip(*up)
            A[list(rr), list(cc)] = vv
        if dn:
            rr, cc, vv = zip(*dn)
            A[np.asarray(rr, dtype=np.intp) + dim_up, list(cc)] = vv
        rank = rank_mod_p(A, p)
    return dim_src - rank


def bruteforce_g1_dim(p: int, n: int, d: int,
                      budget: int = DEFAULT_BUDGET) -> int:
    """Exact dimension of the degree-d Frobenius-kernel invariants of S."""
    total = 0
    for w in range(0, d + 1, p):
        if (d + w) % 2:
            continue
        kern = slice_kernel_dim(p, n, d, w, budget=budget)
        total += kern if w == 0 else 2 * kern
    return total


def bruteforce_g1_dim_unreduced(p: int, n: int, d: int,
                                budget: int = DEFAULT_BUDGET) -> int:
    """Same computation without the weight-negation shortcut (test support)."""
    total = 0
    for w in range(-d, d + 1):
        if w % p or (d + w) % 2:
            continue
        total += slice_kernel_dim(p, n, d, w, budget=budget)
    return total
