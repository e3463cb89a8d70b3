"""Acceptance suite: each criterion runs at its stated tolerance (all checks
are exact) and prints one pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
appear.  Criterion 1 is expected to fail on a known subset of pairs: the
computed decompositions disagree with the previously tabulated distinct-count
values at (n,p) = (8,3) and at p = 2 for even n.  In each case the differing
summands are boundary elements of the certified intervals, every one of which
is provably realized (criterion 3 checks exactly that, on the same data), and
the multiplicities carrying them are certified by the Hilbert-series identity
(criterion 4) and the rank sums (criterion 7).  The tabulated values appear
to drop those boundary cases; the computation is reported as-is, never
adjusted to match.
"""

import time
from itertools import product
from math import comb

import pytest

from frobsum.characters import (
    WeightChar, weyl_char, tilting_char, nabla_mults, decompose_tilting_char,
)
from frobsum.fusion import tableau_distribution, fusion_power_of_tuple
from frobsum.decomposition import (
    decompose_grassmannian, summand_inventory, duality_violations,
    contains_kaneda, published_sheaf_count,
)
from frobsum.hilbert import hs_of_summand_list, hs_R
from frobsum import fpkernel, ncr


def _report(num, ok, detail=""):
    print(f"\nCRITERION {num}: {'PASS' if ok else 'FAIL'}"
          + (f"  [{detail}]" if detail else ""))


# ---------------------------------------------------------------------------


def test_criterion_1_summand_counts(decomp_cache):
    failures = []
    timings = []
    pairs = {(4, 2): 3, (5, 3): 7, (6, 3): 12, (7, 3): 17, (8, 3): 18}
    for n in range(5, 13):
        pairs[(n, 2)] = (-5 + 4 * n + n * n) // 8 if n % 2 else \
            (-16 + 2 * n + n * n) // 8
    for (n, p), want in sorted(pairs.items()):
        t0 = time.monotonic()
        got = decomp_cache(p, n, "sheaf").distinct_count()
        timings.append(time.monotonic() - t0)
        if got != want:
            failures.append((n, p, got, want))
    # the flagged pair is computed and reported, excluded from pass/fail
    flagged = decomp_cache(3, 4, "sheaf")
    flagged_detail = (f"(4,3) computed {flagged.distinct_count()} vs published "
                      f"{published_sheaf_count(4, 3)}; table "
                      f"{sorted(flagged.sheaf_entries.items())}")
    ok = not failures
    _report(1, ok,
            f"max pair runtime {max(timings):.1f}s; {flagged_detail}"
            + ("" if ok else f"; MISMATCHES (computed vs published): {failures}"))
    assert ok, (
        "computed distinct-summand counts disagree with the published table "
        f"at {failures} (entries are (n, p, computed, published)); the "
        "computed values realize the certified intervals exactly (criterion "
        "3) and are certified by the Hilbert identity (criterion 4) and rank "
        "sums (criterion 7); the published table evidently drops boundary "
        "cases, see the module docstring")


def test_criterion_1_supporting_evidence(decomp_cache):
    # not a numbered criterion: direct brute-force certification of the
    # smallest pair where the computed count disagrees with the published
    # table.  At (n,p) = (6,2) the extra distinct summands enter the
    # kernel-invariants series at degrees <= 8, squarely inside oracle reach;
    # the series assembled from the computed multiplicities (including the
    # disputed T(1) shift-6 entry of multiplicity 34) matches the
    # independently eliminated dimensions exactly.
    inv = decomp_cache(2, 6)
    assert inv.tilt_entries.get((1, 6)) == 34
    series = hs_of_summand_list(inv, 2, 6, 8)
    for d in range(9):
        direct = fpkernel.bruteforce_g1_dim(2, 6, d, budget=600 * 1024 * 1024)
        assert direct == series[d], (d, direct, series[d])


def test_criterion_1_supporting_evidence_series(decomp_cache):
    # not a numbered criterion: the ring-level Hilbert identity extended to
    # n = 7, 8 (criterion 4 stops at n = 6).  At (8,3) the identity sees the
    # disputed weight-3 entry from degree 24 on, so the multiplicity table
    # containing it is certified the same way the undisputed ones are.
    D = 60
    for p, n in ((2, 7), (3, 7), (2, 8), (3, 8)):
        lhs = hs_of_summand_list(decomp_cache(p, n, "ring"), p, n, D)
        assert lhs.first_difference(hs_R(n, D)) is None, (p, n)
    assert decomp_cache(3, 8, "ring").tilt_entries.get((3, 15)) == 272


def test_criterion_2_n4_tilting_case(decomp_cache):
    want = {("O", 0, 0), ("O", 0, -1), ("O", 0, -2), ("O", 0, -3),
            ("Tm", 1, -2), ("wedgeR", 1, -1)}
    ok = True
    for p in (5, 7):
        got = set(decomp_cache(p, 4, "sheaf").sheaf_entries)
        ok = ok and got == want
    kaneda_pairs = [(p, n) for p in (5, 7) for n in range(4, p + 1)]
    for p, n in kaneda_pairs:
        ok = ok and contains_kaneda(p, n)[0]
    _report(2, ok, f"exceptional collection contained for {kaneda_pairs}")
    assert ok


def test_criterion_3_range_conformance(decomp_cache):
    violations = []
    for p in (2, 3, 5, 7):
        for n in range(4, 9):
            for level in ("invariants", "ring", "sheaf"):
                rep = summand_inventory(decomp_cache(p, n, level))
                if rep.missing:
                    violations.append((n, p, level, rep.missing))
    ok = not violations
    _report(3, ok, "all computed summands inside the certified intervals and "
            "every interval element realized, n<=8, p in {2,3,5,7}"
            + ("" if ok else f"; missing: {violations}"))
    assert ok, violations


def test_criterion_4_ring_hilbert_identity(decomp_cache):
    D = 60
    t0 = time.monotonic()
    bad = []
    for n in (4, 5, 6):
        for p in (2, 3, 5):
            lhs = hs_of_summand_list(decomp_cache(p, n, "ring"), p, n, D)
            diff = lhs.first_difference(hs_R(n, D))
            if diff is not None:
                bad.append((n, p, diff))
    elapsed = time.monotonic() - t0
    ok = not bad and elapsed < 300
    _report(4, ok, f"9 identities to degree {D} in {elapsed:.1f}s (< 300s)")
    assert not bad, bad
    assert elapsed < 300


def test_criterion_5_bruteforce_oracle(decomp_cache):
    budget = 512 * 1024 * 1024
    bad = []
    checked = 0
    for p, n, dmax in ((2, 4, 12), (3, 4, 12), (2, 5, 8)):
        series = hs_of_summand_list(decomp_cache(p, n), p, n, dmax)
        for d in range(dmax + 1):
            direct = fpkernel.bruteforce_g1_dim(p, n, d, budget=budget)
            checked += 1
            if direct != series[d]:
                bad.append((p, n, d, direct, series[d]))
    spot = fpkernel.bruteforce_g1_dim(2, 4, 2, budget=budget)
    ok = not bad and spot == 14
    _report(5, ok, f"{checked} degrees checked; dim(S_2)^(kernel) = {spot} at "
            "(p,n)=(2,4)")
    assert ok, (bad, spot)


def test_criterion_6_fusion_tableau_equivalence():
    mismatches = 0
    compared = 0

    def recurse(p, prefix, fus_states, tab_states, depth):
        nonlocal mismatches, compared
        fusion_q = {}
        for (q, _d), m in fus_states.items():
            fusion_q[q] = fusion_q.get(q, 0) + m
        tableau_q = {}
        for (l1, l2), ways in tab_states.items():
            tableau_q[l1 - l2] = tableau_q.get(l1 - l2, 0) + ways
        compared += 1
        if fusion_q != tableau_q:
            mismatches += 1
        if depth == 5:
            return
        for i in range(p - 1):
            from frobsum.fusion import _multiset_product
            nf = _multiset_product(p, fus_states, {(i, 0): 1})
            nt = {}
            for (l1, l2), ways in tab_states.items():
                for r2 in range(i + 1):
                    n2, n1 = l2 + r2, l1 + i - r2
                    if n2 > l1 or n1 - l2 > p - 2:
                        continue
                    nt[(n1, n2)] = nt.get((n1, n2), 0) + ways
            recurse(p, prefix + (i,), nf, nt, depth + 1)

    for p in (2, 3, 5, 7):
        recurse(p, (), {(0, 0): 1}, {(0, 0): 1}, 0)
    ok = mismatches == 0
    _report(6, ok, f"{compared} weight tuples compared exhaustively "
            "(p<=7, length<=5), all q at once")
    assert ok


def test_criterion_6_matches_public_oracle():
    # spot-check that the recursive walk above agrees with the public oracle
    for p, weights in [(3, (1, 1)), (5, (3, 3)), (7, (5, 2, 4)), (5, (1, 2, 3, 0))]:
        assert tableau_distribution(p, weights) == fusion_power_of_tuple(p, weights)


def test_criterion_7_duality_and_rank_sums(decomp_cache):
    bad = []
    for p in (2, 3, 5, 7):
        for n in range(4, 9):
            inv = decomp_cache(p, n)
            if duality_violations(inv):
                bad.append(("duality", n, p))
            for level in ("invariants", "ring", "sheaf"):
                slist = decomp_cache(p, n, level)
                if slist.rank_sum() != slist.expected_rank_sum():
                    bad.append(("rank", n, p, level))
    ok = not bad
    _report(7, ok, "duality symmetry and exact rank sums p^(2n-3) / p^(2n-4), "
            "n<=8, p in {2,3,5,7}")
    assert ok, bad


def test_criterion_8_ncr_polynomiality():
    D, guard = 80, 20
    bad = []
    t0 = time.monotonic()
    for n in (5, 6, 7, 8):
        H = ncr.hom_hilbert_matrix(n, D)
        for i in range(len(H.labels)):
            if H.entries[i][i][0] != 1:
                bad.append((n, "diagonal", H.labels[i]))
        Hinv = ncr.invert_truncated_matrix(H)
        rep = ncr.polynomiality_report(H, Hinv, guard=guard)
        if not rep.polynomial:
            bad.append((n, "not polynomial", rep.max_degree))
        if not rep.product_ok:
            bad.append((n, "product", rep.product_detail))
        if rep.non_integral:
            bad.append((n, "non-integral", rep.non_integral))
    convention = ncr.hom_entry(4, ("K", 1), ("K", 1), 2)[0]
    if convention != 1:
        bad.append(("n=4 rig", "convention", convention))
    ok = not bad
    _report(8, ok, f"n in 5..8 at D={D}, guard={guard}; degree-0 convention "
            f"check 16-15={convention}; {time.monotonic()-t0:.1f}s")
    assert ok, bad


def test_criterion_9_character_round_trip():
    bad = []
    for p in (2, 3, 5, 7):
        for u in range(201):
            if decompose_tilting_char(p, tilting_char(p, u)) != {u: 1}:
                bad.append(("roundtrip", p, u))
            total = WeightChar.zero()
            for v, mult in nabla_mults(p, u).items():
                total = total + weyl_char(v) * mult
            if total != tilting_char(p, u):
                bad.append(("nabla", p, u))
    ok = not bad
    _report(9, ok, "round trip and induced-multiplicity identity, "
            "u<=200, p in {2,3,5,7}")
    assert ok, bad
