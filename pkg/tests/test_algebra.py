import numpy as np
import pytest

from src.core.algebra import (
    Domain,
    MixedRadixIndex,
    MultivarPoly,
    PhaseArray2D,
    PhaseSequence,
    RadixProfile,
    eval_poly,
    from_mixed_radix,
    kronecker_phase,
    materialize_array,
    materialize_sequence,
    to_mixed_radix,
)
from src.core.errors import DomainError, ParameterError, RangeError


def test_to_mixed_radix_earlier_digits_are_least_significant():
    domain = Domain.of((2, 2), (3, 1))
    assert to_mixed_radix(5, domain).digits == (1, 0, 1)
    assert to_mixed_radix(0, domain).digits == (0, 0, 0)
    assert to_mixed_radix(11, domain).digits == (1, 1, 2)


def test_from_mixed_radix_inverts_every_index():
    domain = Domain.of((3, 2), (2, 1), (5, 1))
    assert [from_mixed_radix(to_mixed_radix(j, domain)) for j in range(domain.size)] == list(
        range(domain.size)
    )


def test_digit_table_matches_to_mixed_radix():
    domain = Domain.of((2, 1), (3, 2))
    table = domain.digit_table()
    for j in range(domain.size):
        assert tuple(table[j]) == to_mixed_radix(j, domain).digits


@pytest.mark.parametrize("index", [-1, 12, 100])
def test_to_mixed_radix_out_of_range(index):
    with pytest.raises(RangeError):
        to_mixed_radix(index, Domain.of((2, 2), (3, 1)))


def test_digit_outside_radix_is_domain_error():
    with pytest.raises(DomainError):
        MixedRadixIndex((0, 2), Domain.of((2, 2)))


def test_radix_profile_sizes():
    profile = RadixProfile(((2, 2), (3, 2)), 6)
    assert profile.length == 36
    assert profile.zcz_width == 6
    assert profile.radix_product == 6
    assert profile.code_count == 36
    assert profile.labels()[:3] == ((0, 0), (1, 0), (0, 1))


@pytest.mark.parametrize(
    "factors, modulus",
    [
        (((2, 2), (2, 3)), 2),  # primo repetido
        (((4, 2),), 4),  # no primo
        (((3, 1),), 3),  # m < 2
        (((3, 2),), 4),  # p no divide λ
        ((), 2),
    ],
)
def test_radix_profile_rejects_invalid(factors, modulus):
    with pytest.raises(ParameterError):
        RadixProfile(factors, modulus)


def test_eval_poly_reduces_mod_lambda():
    domain = Domain.of((3, 2))
    poly = MultivarPoly.monomial(domain, 3, {0: 1, 1: 1}) + MultivarPoly.variable(domain, 3, 0, 2)
    assert eval_poly(poly, MixedRadixIndex((2, 2), domain)) == (4 + 4) % 3
    assert eval_poly(poly, MixedRadixIndex((0, 1), domain)) == 0


def _random_poly(rng, domain, modulus, size=5):
    terms = [
        (tuple(int(rng.integers(0, r)) for r in domain.radices), int(rng.integers(0, modulus)))
        for _ in range(size)
    ]
    return MultivarPoly(domain, modulus, terms)


@pytest.mark.parametrize("blocks, modulus", [(((2, 3),), 4), (((3, 2), (2, 1)), 6), (((5, 1), (3, 1)), 15)])
def test_eval_poly_is_additive(rng, blocks, modulus):
    domain = Domain.of(*blocks)
    for _ in range(10):
        f, g = _random_poly(rng, domain, modulus), _random_poly(rng, domain, modulus)
        total = f + g
        for point in domain.points():
            assert eval_poly(total, point) == (eval_poly(f, point) + eval_poly(g, point)) % modulus
        assert np.array_equal(
            materialize_sequence(total).phases,
            (materialize_sequence(f).phases + materialize_sequence(g).phases) % modulus,
        )


def test_eval_poly_domain_mismatch():
    poly = MultivarPoly.constant(Domain.of((3, 2)), 3, 1)
    with pytest.raises(DomainError):
        eval_poly(poly, MixedRadixIndex((0,), Domain.of((3, 1))))


def test_exponent_overflow_is_rejected():
    domain = Domain.of((2, 1))
    x = MultivarPoly.variable(domain, 4, 0)
    with pytest.raises(DomainError):
        x * x


def test_polynomial_arithmetic_cancels_terms():
    domain = Domain.of((3, 2))
    x = MultivarPoly.variable(domain, 6, 0, 4)
    y = MultivarPoly.variable(domain, 6, 1)
    poly = x + y + MultivarPoly.variable(domain, 6, 0, 2)
    assert poly == y
    assert (poly - y).is_zero
    assert (x * y).order == 2


def test_materialize_sequence_matches_pointwise_evaluation(rng):
    domain = Domain.of((2, 2), (3, 2))
    modulus = 6
    poly = MultivarPoly.zero(domain, modulus)
    for _ in range(6):
        a, b = rng.choice(domain.num_variables, 2, replace=False)
        poly = poly + MultivarPoly.monomial(domain, modulus, {int(a): 1, int(b): 1}, int(rng.integers(6)))
    poly = poly + MultivarPoly.monomial(domain, modulus, {3: 2}, 5) + 1

    seq = materialize_sequence(poly)
    assert len(seq) == domain.size
    for j in range(domain.size):
        assert seq.phases[j] == eval_poly(poly, to_mixed_radix(j, domain))


def test_kronecker_phase_layout():
    a = PhaseSequence(3, [0, 1])
    b = PhaseSequence(3, [0, 1, 2])
    assert kronecker_phase(a, b).tolist() == [0, 1, 2, 1, 2, 0]
    assert np.allclose(kronecker_phase(a, b).to_complex(), np.kron(a.to_complex(), b.to_complex()))


def test_kronecker_phase_modulus_mismatch():
    with pytest.raises(DomainError):
        kronecker_phase(PhaseSequence(2, [0]), PhaseSequence(3, [0]))


def test_materialize_array_rows():
    domain = Domain.of((2, 2))
    rows = [MultivarPoly.variable(domain, 2, 0), MultivarPoly.variable(domain, 2, 1)]
    arr = materialize_array(rows, 2)
    assert arr.tolist() == [[0, 1, 0, 1], [0, 0, 1, 1]]


def test_materialize_array_inconsistent_domains():
    rows = [MultivarPoly.zero(Domain.of((2, 2)), 2), MultivarPoly.zero(Domain.of((2, 3)), 2)]
    with pytest.raises(DomainError):
        materialize_array(rows, 2)


def test_phase_containers_validate_range():
    with pytest.raises(DomainError):
        PhaseSequence(4, [0, 4])
    with pytest.raises(DomainError):
        PhaseArray2D(4, [0, 1])
    assert PhaseSequence.from_values([-1, 5], 4).tolist() == [3, 1]
