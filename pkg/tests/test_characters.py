import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from frobsum.characters import (
    WeightChar, NotTiltingError,
    weyl_char, tilting_digits, tilting_char, tilting_dim, nabla_mults,
    tensor_decompose_simples, decompose_tilting_char,
)

PRIMES = [2, 3, 5, 7]


def test_weyl_char_examples():
    assert weyl_char(0).coeffs == {0: 1}
    assert weyl_char(2).coeffs == {2: 1, 0: 1, -2: 1}
    w3 = weyl_char(3)
    assert w3.dimension() == 4
    assert set(w3.coeffs) == {3, 1, -1, -3}
    with pytest.raises(ValueError):
        weyl_char(-1)


def test_tilting_digits_examples():
    assert tilting_digits(3, 7) == (4, 1)
    assert tilting_digits(2, 2) == (2, 0)
    assert tilting_digits(5, 3) == (3,)


@pytest.mark.parametrize("p", PRIMES)
def test_tilting_digits_constraints(p):
    for u in range(300):
        digits = tilting_digits(p, u)
        assert sum(d * p ** i for i, d in enumerate(digits)) == u
        k = len(digits) - 1
        for d in digits[:k]:
            assert p - 1 <= d <= 2 * p - 2
        assert 0 <= digits[k] <= p - 1
        if k >= 1:
            assert digits[k] < p - 1


def test_tilting_char_examples():
    assert tilting_char(3, 4) == weyl_char(4) + weyl_char(0)
    assert tilting_dim(3, 4) == 6
    assert tilting_char(2, 1) == weyl_char(1)
    # digit product: T(7) = T(4) stretched against T(1)
    assert tilting_char(3, 7) == weyl_char(7) + weyl_char(3)
    assert tilting_dim(3, 7) == 12


@pytest.mark.parametrize("p", PRIMES)
def test_tilting_char_shape(p):
    for u in range(0, 60):
        ch = tilting_char(p, u)
        assert ch.is_symmetric()
        assert ch.max_weight() == u
        assert ch.coeff(u) == 1
        assert all(c > 0 for c in ch.coeffs.values())
        # per-digit dimension: u_i + 1 for a restricted digit, 2p above
        expect = 1
        for d in tilting_digits(p, u):
            expect *= (d + 1) if d <= p - 1 else 2 * p
        assert ch.dimension() == expect


def test_nabla_mults_examples():
    assert nabla_mults(3, 4) == {0: 1, 4: 1}
    assert nabla_mults(3, 7) == {3: 1, 7: 1}
    assert nabla_mults(5, 3) == {3: 1}


@pytest.mark.parametrize("p", PRIMES)
def test_nabla_mults_character_identity(p):
    for u in range(0, 80):
        total = WeightChar.zero()
        for v, mult in nabla_mults(p, u).items():
            assert mult == 1
            total = total + weyl_char(v) * mult
        assert total == tilting_char(p, u)


def test_tensor_decompose_examples():
    assert tensor_decompose_simples(3, 1, 1) == {0: 1, 2: 1}
    assert tensor_decompose_simples(5, 3, 3) == {0: 1, 4: 1, 6: 1}
    assert tensor_decompose_simples(2, 1, 1) == {2: 1}
    with pytest.raises(ValueError):
        tensor_decompose_simples(3, 3, 0)


@pytest.mark.parametrize("p", PRIMES)
def test_tensor_decompose_character_and_dimension(p):
    for a in range(p):
        for b in range(p):
            dec = tensor_decompose_simples(p, a, b)
            assert dec == tensor_decompose_simples(p, b, a)
            # for a, b <= p-1 the simples are induced modules, so the product
            # character is weyl * weyl
            total = WeightChar.zero()
            dim = 0
            for m, mult in dec.items():
                total = total + tilting_char(p, m) * mult
                dim += mult * tilting_dim(p, m)
            assert total == weyl_char(a) * weyl_char(b)
            assert dim == (a + 1) * (b + 1)


def test_decompose_tilting_char_examples():
    assert decompose_tilting_char(3, weyl_char(0)) == {0: 1}
    assert decompose_tilting_char(3, weyl_char(4) + weyl_char(0)) == {4: 1}
    with pytest.raises(NotTiltingError):
        decompose_tilting_char(3, weyl_char(4))


@pytest.mark.parametrize("p", PRIMES)
def test_round_trip_small(p):
    for u in range(0, 60):
        assert decompose_tilting_char(p, tilting_char(p, u)) == {u: 1}


@given(st.sampled_from(PRIMES),
       st.lists(st.tuples(st.integers(0, 40), st.integers(1, 5)),
                min_size=1, max_size=4))
@settings(max_examples=60, deadline=None)
def test_decompose_recovers_combinations(p, entries):
    # all weights in one character must share parity
    parity = entries[0][0] % 2
    combo = {}
    total = WeightChar.zero()
    for u, mult in entries:
        u = u if u % 2 == parity else u + 1
        combo[u] = combo.get(u, 0) + mult
    for u, mult in combo.items():
        total = total + tilting_char(p, u) * mult
    assert decompose_tilting_char(p, total) == combo


@given(st.sampled_from(PRIMES), st.integers(0, 150))
@settings(max_examples=80, deadline=None)
def test_char_self_duality(p, u):
    assert tilting_char(p, u).is_symmetric()
