from itertools import product

import pytest

from frobsum.fusion import (
    fusion_product, graded_fusion_power, a_polynomials,
    tableau_count, tableau_distribution, fusion_power_of_tuple,
)

PRIMES = [2, 3, 5, 7]


def test_fusion_product_examples():
    assert fusion_product(3, 1, 1) == {(0, 0): 1}
    assert fusion_product(5, 2, 1) == {(1, 0): 1, (3, 0): 1}
    for p in (3, 5, 7):
        for a in range(p - 1):
            assert fusion_product(p, p - 2, a) == {(p - 2 - a, 0): 1}
    with pytest.raises(ValueError):
        fusion_product(5, 4, 0)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_fusion_invertibility(p):
    # fusing with the top alcove weight permutes the alcove involutively
    for a in range(p - 1):
        once = fusion_product(p, p - 2, a)
        assert list(once) == [(p - 2 - a, 0)]
        assert fusion_product(p, p - 2, p - 2 - a) == {(a, 0): 1}


@pytest.mark.parametrize("p", [3, 5, 7])
def test_fusion_associativity_commutativity(p):
    for a, b, c in product(range(p - 1), repeat=3):
        left = fusion_power_of_tuple(p, (a, b, c))
        right = fusion_power_of_tuple(p, (c, b, a))
        assert left == right
        # associate the other way through an intermediate product
        acc = {}
        for (q, _), m in fusion_product(p, b, c).items():
            for (qq, _), mm in fusion_product(p, a, q).items():
                acc[qq] = acc.get(qq, 0) + m * mm
        assert {q: m for q, m in acc.items() if m} == left


def test_graded_fusion_power_examples():
    for n in (1, 3, 6):
        assert graded_fusion_power(2, n) == {(0, 0): 1}
    assert graded_fusion_power(3, 2) == {(0, 0): 1, (0, 2): 1, (1, 1): 2}
    power = graded_fusion_power(3, 4)
    q0 = {d: c for (q, d), c in power.items() if q == 0}
    q1 = {d: c for (q, d), c in power.items() if q == 1}
    assert q0 == {0: 1, 2: 6, 4: 1}
    assert q1 == {1: 4, 3: 4}


def test_a_polynomials_examples():
    ap = a_polynomials(3, 4)
    assert ap.a0.coeffs == [1, 0, 6, 0, 1]
    assert ap.a_p2.coeffs == [0, 4, 0, 4, 0]
    assert a_polynomials(2, 6).a0.coeffs == [1]
    assert a_polynomials(2, 6).a_p2.coeffs == [1]


@pytest.mark.parametrize("p,n", [(2, 6), (3, 5), (3, 6), (5, 4), (5, 5),
                                 (7, 4), (3, 8), (7, 6)])
def test_a_polynomial_parity_and_support(p, n):
    ap = a_polynomials(p, n)
    for d, c in enumerate(ap.a0.coeffs):
        if c:
            assert d % 2 == 0
            assert c > 0
    for d, c in enumerate(ap.a_p2.coeffs):
        if c:
            assert d % 2 == (p - 2) % 2
            assert c > 0
    if p > 2:
        # exact support intervals: all even degrees up to n(p-2) (n even) or
        # (n-1)(p-2) (n odd) for the weight-0 row, the complementary bound
        # for the top-weight row starting at p-2
        a0_hi = n * (p - 2) if n % 2 == 0 else (n - 1) * (p - 2)
        ap2_hi = (n - 1) * (p - 2) if n % 2 == 0 else n * (p - 2)
        assert [d for d, c in enumerate(ap.a0.coeffs) if c] == \
            list(range(0, a0_hi + 1, 2))
        assert [d for d, c in enumerate(ap.a_p2.coeffs) if c] == \
            list(range(p - 2, ap2_hi + 1, 2))


@pytest.mark.parametrize("p,n", [(2, 5), (3, 4), (3, 7), (5, 4), (5, 6), (7, 5)])
def test_a_polynomial_symmetry(p, n):
    # coefficient of t^d in the weight-q row matches t^{n(p-2)-d} in the
    # weight-q' row, q' flipped when n is odd
    power = graded_fusion_power(p, n)
    rows = {}
    for (q, d), c in power.items():
        rows.setdefault(q, {})[d] = c
    top = n * (p - 2)
    for q in (0, p - 2):
        qq = q if n % 2 == 0 else p - 2 - q
        got = rows.get(q, {})
        dual = rows.get(qq, {})
        for d in range(top + 1):
            assert got.get(d, 0) == dual.get(top - d, 0)


def test_tableau_count_examples():
    assert tableau_count(3, (1, 1), 0) == 1
    assert tableau_count(5, (3, 3), 6) == 0
    assert tableau_count(5, (3, 3), 0) == 1
    with pytest.raises(ValueError):
        tableau_count(3, (2,), 0)


def test_tableau_oracle_small_exhaustive():
    # full agreement with the fusion product for short tuples
    for p in PRIMES:
        for k in range(1, 4):
            for weights in product(range(p - 1), repeat=k):
                assert tableau_distribution(p, weights) == \
                    fusion_power_of_tuple(p, weights), (p, weights)


def test_graded_power_matches_tuple_enumeration():
    for p, n in [(3, 3), (5, 2), (3, 4)]:
        direct = {}
        for weights in product(range(p - 1), repeat=n):
            d = sum(weights)
            for q, c in fusion_power_of_tuple(p, weights).items():
                direct[(q, d)] = direct.get((q, d), 0) + c
        assert direct == graded_fusion_power(p, n)
