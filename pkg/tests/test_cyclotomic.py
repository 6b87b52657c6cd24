import cmath

import pytest

from src.core.cyclotomic import (
    cyclotomic_coefficients,
    root_sum_is_zero,
    root_sum_to_complex,
)
from src.core.errors import DomainError, ParameterError


@pytest.mark.parametrize(
    "n, coeffs",
    [
        (1, (-1, 1)),
        (2, (1, 1)),
        (3, (1, 1, 1)),
        (4, (1, 0, 1)),
        (6, (1, -1, 1)),
        (12, (1, 0, -1, 0, 1)),
    ],
)
def test_cyclotomic_coefficients(n, coeffs):
    assert cyclotomic_coefficients(n) == coeffs


def test_cyclotomic_order_must_be_positive():
    with pytest.raises(ParameterError):
        cyclotomic_coefficients(0)


@pytest.mark.parametrize(
    "counts, modulus, expected",
    [
        ((1, 0, 1, 0, 1, 0), 6, True),  # 1 + ω² + ω⁴
        ((1, 0, 0, 1, 0, 0), 6, True),  # 1 - 1
        ((2, 1, 0, 0, 1, 0), 6, False),
        ((1, 1, 0, 0, 0, 0), 6, False),
        ((1, 0, 1, 0), 4, True),
        ((3, 3), 2, True),
        ((0, 0, 0), 3, True),
        ((1, 1, 1), 3, True),
        ((1, 1, 0), 3, False),
    ],
)
def test_root_sum_is_zero(counts, modulus, expected):
    assert root_sum_is_zero(counts, modulus) is expected


def test_root_sum_is_zero_agrees_with_float(rng):
    for modulus in (2, 3, 4, 6, 12):
        for _ in range(50):
            counts = rng.integers(0, 3, modulus)
            exact = root_sum_is_zero(counts, modulus)
            approx = abs(root_sum_to_complex(counts, modulus)) < 1e-9
            assert exact == approx


def test_root_sum_to_complex():
    z = root_sum_to_complex((0, 1, 0, 0), 4)
    assert cmath.isclose(z, 1j, abs_tol=1e-12)


def test_root_sum_shape_mismatch():
    with pytest.raises(DomainError):
        root_sum_is_zero((1, 0, 0), 4)
