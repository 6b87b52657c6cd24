"""
Exact arithmetic on sums of λ-th roots of unity.

A root sum Σ c_e ω_λ^e is carried as its count vector (c_0, ..., c_{λ-1}).
The sum vanishes exactly when Σ c_e x^e is divisible by the cyclotomic
polynomial Φ_λ over the integers, which is what the verifiers rely on.
"""
from functools import lru_cache
from typing import Sequence

import numpy as np
from sympy import Poly, divisors, symbols

from src.core.errors import DomainError, ParameterError

_x = symbols("x")


@lru_cache(maxsize=None)
def cyclotomic_coefficients(n: int) -> tuple[int, ...]:
    """
    Coefficients of Φ_n, lowest degree first.

    Φ_n is obtained by dividing x^n − 1 by Φ_d for every proper divisor d of n.
    """
    if n < 1:
        raise ParameterError(f"cyclotomic order must be positive, got {n}")

    quotient = Poly(_x**n - 1, _x)
    for d in divisors(n)[:-1]:
        divisor = Poly(list(reversed(cyclotomic_coefficients(d))), _x)
        quotient, remainder = quotient.div(divisor)
        if not remainder.is_zero:
            raise ArithmeticError(f"Φ_{d} does not divide x^{n} - 1")

    return tuple(int(c) for c in reversed(quotient.all_coeffs()))


@lru_cache(maxsize=None)
def _reduction_matrix(n: int) -> np.ndarray:
    # Row e holds the coefficients of x^e mod Φ_n.
    phi = Poly(list(reversed(cyclotomic_coefficients(n))), _x)
    degree = phi.degree()
    matrix = np.zeros((n, degree), dtype=np.int64)
    for e in range(n):
        residue = Poly(_x**e, _x).rem(phi)
        coeffs = [int(c) for c in reversed(residue.all_coeffs())]
        matrix[e, : len(coeffs)] = coeffs
    matrix.setflags(write=False)
    return matrix


@lru_cache(maxsize=None)
def unit_roots(modulus: int) -> np.ndarray:
    """ω_λ^e for e = 0..λ−1."""
    roots = np.exp(2j * np.pi * np.arange(modulus) / modulus)
    roots.setflags(write=False)
    return roots


def _as_counts(counts: Sequence[int] | np.ndarray, modulus: int) -> np.ndarray:
    vector = np.asarray(counts, dtype=np.int64)
    if vector.shape != (modulus,):
        raise DomainError(f"expected {modulus} root counts, got shape {vector.shape}")
    return vector


def root_sum_is_zero(counts: Sequence[int] | np.ndarray, modulus: int) -> bool:
    """True iff Σ counts[e]·ω^e is exactly zero."""
    vector = _as_counts(counts, modulus)
    return not np.any(vector @ _reduction_matrix(modulus))


def root_sum_to_complex(counts: Sequence[int] | np.ndarray, modulus: int) -> complex:
    """Floating-point image Σ counts[e]·ω^e."""
    vector = _as_counts(counts, modulus)
    return complex(np.dot(vector, unit_roots(modulus)))
