"""Independent certification through exact Hilbert series.

Everything here is derived from per-degree characters of the polynomial ring
S = Sym(F tensor V) (dim F = n, dim V = 2) and from the equivariant Koszul-type
resolutions of the kernel modules, so it never touches the decomposition
engine's combinatorics; agreement between the two is the certificate.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .characters import WeightChar, weyl_char, nabla_mults, tilting_dim
from .series import TruncSeries, geometric_power
from . import decomposition as dec
from . import fpkernel


@lru_cache(maxsize=None)
def char_S_degree(n: int, d: int) -> WeightChar:
    """Character of the degree-d part of S: the n-fold graded convolution of
    one-pair characters (a single pair k[x,y] has weyl_char(e) in degree e)."""
    if d < 0:
        return WeightChar.zero()
    if n == 1:
        return weyl_char(d)
    out = WeightChar.zero()
    half = n // 2
    for e in range(d + 1):
        left = char_S_degree(half, e)
        right = char_S_degree(n - half, d - e)
        out = out + left * right
    return out


def invariant_dim(c: WeightChar) -> int:
    """Multiplicity of the trivial induced module in a good-filtration
    character: coefficient at weight 0 minus coefficient at weight 2."""
    return c.coeff(0) - c.coeff(2)


def _invariant_dim_times(m: WeightChar, c: WeightChar) -> int:
    """invariant_dim(m * c) without forming the product."""
    total = 0
    for w, mc in m.coeffs.items():
        total += mc * (c.coeff(-w) - c.coeff(2 - w))
    return total


@lru_cache(maxsize=None)
def char_K(n: int, j: int, d: int) -> WeightChar:
    """Degree-d character of the j-th kernel module (normalized to start in
    degree 0), spliced from its divided-power Koszul tail:
    sum_i (-1)^i C(n, j+2+i) weyl(i) char_S(n, d-i)."""
    if not 1 <= j <= n - 2:
        raise ValueError(f"j must lie in [1, n-2], got {j}")
    if d < 0:
        return WeightChar.zero()
    out = WeightChar.zero()
    for i in range(min(d, n - j - 2) + 1):
        term = (weyl_char(i) * char_S_degree(n, d - i)).scale(comb(n, j + 2 + i))
        out = out + term if i % 2 == 0 else out - term
    return out


def hs_K_numerator(n: int, j: int) -> list:
    return [(-1) ** i * (i + 1) * comb(n, j + 2 + i) for i in range(n - j - 1)]


def hs_K(n: int, j: int, trunc: int) -> TruncSeries:
    """Hilbert series of the j-th kernel module: closed-form numerator over
    (1-t)^(2n)."""
    num = TruncSeries(hs_K_numerator(n, j), trunc)
    return num * geometric_power(1, 2 * n, trunc)


def hs_M(n: int, j: int, trunc: int) -> TruncSeries:
    """Hilbert series of the j-th induced standard module:
    dim in degree d is (j+d+1) C(n-1+d, d)."""
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    return TruncSeries(
        [(j + d + 1) * comb(n - 1 + d, d) for d in range(trunc + 1)], trunc)


def hs_M_resolution(n: int, j: int, trunc: int) -> TruncSeries:
    """The same series from the Euler characteristic of the equivariant free
    resolution; an independent cross-check of hs_M."""
    dim_S = [comb(2 * n + d - 1, d) for d in range(trunc + 1)]

    def s(e):
        return dim_S[e] if 0 <= e <= trunc else 0

    coeffs = []
    for d in range(trunc + 1):
        total = 0
        for l in range(j + 1):
            total += (-1) ** l * (j - l + 1) * comb(n, l) * s(d - l)
        if j <= n - 2:
            sign = (-1) ** (j + 1)
            total += sign * comb(n, j + 2) * s(d - j - 2)
            for i in range(1, n - j - 1):
                total += sign * (-1) ** i * (i + 1) * comb(n, j + 2 + i) * s(d - j - 2 - i)
        coeffs.append(total)
    return TruncSeries(coeffs, trunc)


def hs_covariant(n: int, v: int, trunc: int) -> TruncSeries:
    """Hilbert series of the module of covariants attached to the induced
    module of highest weight v, computed degreewise from characters."""
    if v < 0:
        raise ValueError(f"v must be >= 0, got {v}")
    wv = weyl_char(v)
    return TruncSeries(
        [_invariant_dim_times(wv, char_S_degree(n, d)) for d in range(trunc + 1)],
        trunc)


def hs_covariant_fast(n: int, v: int, trunc: int) -> TruncSeries:
    """Closed binomial form of hs_covariant; must agree with the character
    computation (the character path is ground truth)."""

    def weight_space(i, d):
        if (d - i) % 2 or d < i:
            return 0
        q = (d - i) // 2
        return comb(n + q - 1, q) * comb(n + q + i - 1, q + i)

    return TruncSeries(
        [weight_space(v, d) - weight_space(v + 2, d) for d in range(trunc + 1)],
        trunc)


def hs_T_brace(p: int, n: int, m: int, trunc: int) -> TruncSeries:
    """Hilbert series of the module of covariants attached to the tilting
    module of highest weight m; exactness of invariants on good filtrations
    turns it into the nabla-multiplicity combination of hs_covariant."""
    out = TruncSeries.zero(trunc)
    for v, mult in nabla_mults(p, m).items():
        out = out + hs_covariant(n, v, trunc) * mult
    return out


def hs_K_brace(n: int, j: int, trunc: int) -> TruncSeries:
    """Hilbert series of the invariants of the j-th kernel module."""
    return TruncSeries(
        [invariant_dim(char_K(n, j, d)) for d in range(trunc + 1)], trunc)


def hs_R(n: int, trunc: int) -> TruncSeries:
    """Hilbert series of the invariant ring itself."""
    return hs_covariant(n, 0, trunc)


def hs_of_summand_list(slist: dec.SummandList, p: int, n: int, trunc: int) -> TruncSeries:
    """Assemble the exact Hilbert series a summand list predicts.

    invariants level: a tilting entry (m, d, mult) contributes
    mult * dim T(m) * t^d / (1-t^p)^(2n) and a kernel entry (j, c, mult)
    contributes mult * t^c * hs_K(t^p); at ring level the free factor is
    replaced by the covariant series hs_T_brace(t^p) and hs_K by
    hs_K_brace(t^p).  The sheaf level has no series identity by design.
    """
    if slist.level == "sheaf":
        raise ValueError("sheaf level is certified via rank sums, not series")
    out = TruncSeries.zero(trunc)
    if slist.level == "invariants":
        free = geometric_power(p, 2 * n, trunc)
        for (m, d), mult in slist.tilt_entries.items():
            if d > trunc:
                continue
            out = out + free.shift(d) * (mult * tilting_dim(p, m))
        for (j, c), mult in slist.k_entries.items():
            if c > trunc:
                continue
            out = out + hs_K(n, j, trunc).substitute_power(p).shift(c) * mult
        return out
    hsT = {}
    for (m, d), mult in slist.tilt_entries.items():
        if d > trunc:
            continue
        if m not in hsT:
            hsT[m] = hs_T_brace(p, n, m, trunc).substitute_power(p)
        out = out + hsT[m].shift(d) * mult
    hsK = {}
    for (j, c), mult in slist.k_entries.items():
        if c > trunc:
            continue
        if j not in hsK:
            hsK[j] = hs_K_brace(n, j, trunc).substitute_power(p)
        out = out + hsK[j].shift(c) * mult
    return out


# ---------------------------------------------------------------------------
# the identity suite


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerifyReport:
    n: int
    p: int
    trunc: int
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name, ok, detail=""):
        self.checks.append(CheckResult(name, ok, detail))


def verify_identities(p: int, n: int, trunc: int, oracle: str = "both",
                      budget: int = fpkernel.DEFAULT_BUDGET) -> VerifyReport:
    """Run the certification suite: the ring-level series identity, the
    brute-force kernel-invariants oracle, rank sums, duality, and range
    conformance.  Failures become report entries, never exceptions."""
    if oracle not in ("character", "bruteforce", "both"):
        raise ValueError(f"unknown oracle {oracle!r}")
    report = VerifyReport(n=n, p=p, trunc=trunc)
    ring = dec.decompose_ring(p, n)
    inv = dec.decompose_invariants(p, n)
    sheaf = dec.decompose_grassmannian(p, n)

    if oracle in ("character", "both"):
        lhs = hs_of_summand_list(ring, p, n, trunc)
        rhs = hs_R(n, trunc)
        diff = lhs.first_difference(rhs)
        report.add("ring_hilbert_identity", diff is None,
                   "OK" if diff is None else f"first failing degree {diff}")

    if oracle in ("bruteforce", "both"):
        series = hs_of_summand_list(inv, p, n, trunc)
        checked = 0
        first_bad = None
        for d in range(trunc + 1):
            try:
                direct = fpkernel.bruteforce_g1_dim(p, n, d, budget=budget)
            except fpkernel.BudgetExceededError:
                break
            checked += 1
            if direct != series[d]:
                first_bad = d
                break
        ok = first_bad is None and checked > 0
        detail = (f"agrees for d < {checked}" if first_bad is None
                  else f"first failing degree {first_bad}")
        if checked == 0:
            detail = "budget too small for any degree"
        report.add("bruteforce_invariants", ok, detail)

    for slist in (inv, ring, sheaf):
        got, want = slist.rank_sum(), slist.expected_rank_sum()
        report.add(f"rank_sum_{slist.level}", got == want, f"{got} vs {want}")

    bad = dec.duality_violations(inv)
    report.add("duality", not bad, "OK" if not bad else f"{len(bad)} violations")

    for slist in (inv, sheaf):
        try:
            invrep = dec.summand_inventory(slist)
        except dec.RangeViolationError as exc:
            report.add(f"range_conformance_{slist.level}", False, str(exc))
            continue
        report.add(f"range_conformance_{slist.level}",
                   invrep.all_expected_present(),
                   "OK" if invrep.all_expected_present()
                   else f"missing {invrep.missing[:4]}")
    return report
