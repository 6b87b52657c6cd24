"""
Aperiodic correlation with exact root-of-unity counts.

Every correlation of ω_λ-valued sequences is a sum of λ-th roots of unity, so
it is returned as a CorrelationValue holding how many terms equal each ω^e.
The float image is derived from the counts and is diagnostic only.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from src.core.algebra import PhaseArray2D, PhaseCode, PhaseSequence
from src.core.cyclotomic import root_sum_is_zero, root_sum_to_complex
from src.core.errors import DomainError, RangeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorrelationValue:
    """Σ_e counts[e]·ω_λ^e, kept exact."""
    modulus: int
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if len(self.counts) != self.modulus:
            raise DomainError(f"{len(self.counts)} counts for modulus {self.modulus}")

    @classmethod
    def zero(cls, modulus: int) -> CorrelationValue:
        return cls(modulus, (0,) * modulus)

    @classmethod
    def from_differences(cls, diffs: np.ndarray, modulus: int) -> CorrelationValue:
        """Value of Σ ω^d over an array of integer phase differences."""
        counts = np.bincount(np.mod(diffs, modulus).ravel(), minlength=modulus)
        return cls(modulus, tuple(counts.tolist()))

    @property
    def complex(self) -> complex:
        return root_sum_to_complex(self.counts, self.modulus)

    @property
    def magnitude(self) -> float:
        return abs(self.complex)

    @property
    def term_count(self) -> int:
        return sum(abs(c) for c in self.counts)

    @property
    def is_zero(self) -> bool:
        return root_sum_is_zero(self.counts, self.modulus)

    def conjugate(self) -> CorrelationValue:
        # ω^e -> ω^{-e}
        return CorrelationValue(self.modulus, (self.counts[0],) + self.counts[:0:-1])

    def _check(self, other: CorrelationValue) -> None:
        if other.modulus != self.modulus:
            raise DomainError(f"moduli differ: {self.modulus} != {other.modulus}")

    def __add__(self, other: CorrelationValue) -> CorrelationValue:
        self._check(other)
        return CorrelationValue(self.modulus, tuple(a + b for a, b in zip(self.counts, other.counts)))

    def __sub__(self, other: CorrelationValue) -> CorrelationValue:
        self._check(other)
        return CorrelationValue(self.modulus, tuple(a - b for a, b in zip(self.counts, other.counts)))

    def __mul__(self, other: CorrelationValue) -> CorrelationValue:
        # Cyclic convolution of the count vectors.
        self._check(other)
        n = self.modulus
        outer = np.outer(np.array(self.counts, dtype=np.int64), np.array(other.counts, dtype=np.int64))
        exponents = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
        counts = np.zeros(n, dtype=np.int64)
        np.add.at(counts, exponents.ravel(), outer.ravel())
        return CorrelationValue(n, tuple(counts.tolist()))

    def equals(self, other: CorrelationValue) -> bool:
        """Exact equality of the represented complex numbers."""
        return (self - other).is_zero


@dataclass(frozen=True)
class ShiftGrid:
    """Shifts τ (1-D) or (τ1, τ2) (2-D) to scan."""
    tau1: range
    tau2: range | None = None

    @classmethod
    def window(cls, width: int) -> ShiftGrid:
        """|τ| < width."""
        return cls(range(-width + 1, width))

    @classmethod
    def zcz(cls, z1: int, z2: int) -> ShiftGrid:
        """|τ1| < z1, |τ2| < z2."""
        return cls(range(-z1 + 1, z1), range(-z2 + 1, z2))

    def validate(self, l1: int, l2: int | None = None) -> None:
        for r, limit in ((self.tau1, l1), (self.tau2, l2)):
            if r is None or not len(r):
                continue
            if limit is None or min(r) <= -limit or max(r) >= limit:
                raise RangeError(f"shift range {r} exceeds (-{limit}, {limit})")

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        if self.tau2 is None:
            for t in self.tau1:
                yield (t,)
        else:
            for t1 in self.tau1:
                for t2 in self.tau2:
                    yield (t1, t2)

    def __len__(self) -> int:
        return len(self.tau1) * (len(self.tau2) if self.tau2 is not None else 1)


# ==================== KERNELS ==================== #

def _shift_value(x: np.ndarray, y: np.ndarray, tau: int, modulus: int) -> CorrelationValue:
    # Correlation along the last axis, summed over leading axes; tau >= 0.
    length = x.shape[-1]
    return CorrelationValue.from_differences(x[..., : length - tau] - y[..., tau:], modulus)


def _grid_value(x: np.ndarray, y: np.ndarray, tau1: int, tau2: int, modulus: int) -> CorrelationValue:
    # 2-D correlation over the last two axes; negative shifts by reversing the axis.
    if tau1 < 0:
        x, y, tau1 = x[..., ::-1, :], y[..., ::-1, :], -tau1
    if tau2 < 0:
        x, y, tau2 = x[..., :, ::-1], y[..., :, ::-1], -tau2
    l1, l2 = x.shape[-2:]
    return CorrelationValue.from_differences(x[..., : l1 - tau1, : l2 - tau2] - y[..., tau1:, tau2:], modulus)


def _check_same(left, right, what: str) -> None:
    if left.modulus != right.modulus:
        raise DomainError(f"{what}: moduli differ ({left.modulus} != {right.modulus})")


# ==================== 1-D ==================== #

def accf(a: PhaseSequence, b: PhaseSequence, tau: int) -> CorrelationValue:
    """C(a, b)(τ) = Σ_i ψ(a)_i · ψ(b)*_{i+τ}."""
    _check_same(a, b, "accf")
    if len(a) != len(b):
        raise DomainError(f"accf: lengths differ ({len(a)} != {len(b)})")
    if abs(tau) >= len(a):
        return CorrelationValue.zero(a.modulus)
    if tau < 0:
        return accf(b, a, -tau).conjugate()
    return _shift_value(a.phases, b.phases, tau, a.modulus)


def aacf(a: PhaseSequence, tau: int) -> CorrelationValue:
    return accf(a, a, tau)


def set_accf(first: Sequence[PhaseSequence], second: Sequence[PhaseSequence], tau: int) -> CorrelationValue:
    """Σ_i C(first[i], second[i])(τ); with first = second this is the AACS."""
    if len(first) != len(second) or not first:
        raise DomainError("sequence sets must be non-empty and of equal size")
    total = CorrelationValue.zero(first[0].modulus)
    for a, b in zip(first, second):
        total = total + accf(a, b, tau)
    return total


def code_accf(c1: PhaseCode, c2: PhaseCode, tau: int) -> CorrelationValue:
    """Σ over rows of C(c1_row, c2_row)(τ)."""
    _check_same(c1, c2, "code_accf")
    if c1.shape != c2.shape:
        raise DomainError(f"code_accf: shapes differ ({c1.shape} != {c2.shape})")
    if abs(tau) >= c1.shape[1]:
        return CorrelationValue.zero(c1.modulus)
    if tau < 0:
        return code_accf(c2, c1, -tau).conjugate()
    return _shift_value(c1.rows, c2.rows, tau, c1.modulus)


def accf_via_kronecker(
    a1: PhaseSequence, b1: PhaseSequence, a2: PhaseSequence, b2: PhaseSequence, tau: int
) -> CorrelationValue:
    """
    C(a1 ⊗ b1, a2 ⊗ b2)(τ) assembled from the factor correlations:

        C(a1,a2)(⌊τ/N⌋)·C(b1,b2)(τ mod N) + Δ·C(a1,a2)(⌊τ/N⌋+1)·C(b1,b2)(τ mod N − N)

    with N = |b1| and Δ = 0 iff N divides τ.
    """
    if tau < 0:
        raise RangeError("accf_via_kronecker needs τ >= 0; use conjugate symmetry for negative shifts")
    if len(a1) != len(a2) or len(b1) != len(b2):
        raise DomainError("factor lengths must agree pairwise")
    for seq in (b1, a2, b2):
        _check_same(a1, seq, "accf_via_kronecker")

    n = len(b1)
    q, r = divmod(tau, n)
    value = accf(a1, a2, q) * accf(b1, b2, r)
    if r:
        value = value + accf(a1, a2, q + 1) * accf(b1, b2, r - n)
    return value


# ==================== 2-D ==================== #

def accf_2d(x: PhaseArray2D, y: PhaseArray2D, tau1: int, tau2: int) -> CorrelationValue:
    """C(X, Y)(τ1, τ2) = Σ X_{i,j} · Y*_{i+τ1, j+τ2} over overlapping cells."""
    _check_same(x, y, "accf_2d")
    if x.shape != y.shape:
        raise DomainError(f"accf_2d: shapes differ ({x.shape} != {y.shape})")
    l1, l2 = x.shape
    if abs(tau1) >= l1 or abs(tau2) >= l2:
        return CorrelationValue.zero(x.modulus)
    if tau1 < 0 and tau2 < 0:
        return accf_2d(y, x, -tau1, -tau2).conjugate()
    return _grid_value(x.phases, y.phases, tau1, tau2, x.modulus)


def set_accf_2d(
    first: Sequence[PhaseArray2D], second: Sequence[PhaseArray2D], tau1: int, tau2: int
) -> CorrelationValue:
    """Σ_i C(first[i], second[i])(τ1, τ2); with first = second this is the 2-D AACS."""
    if len(first) != len(second) or not first:
        raise DomainError("array sets must be non-empty and of equal size")
    modulus, shape = first[0].modulus, first[0].shape
    for arr in (*first, *second):
        if arr.modulus != modulus or arr.shape != shape:
            raise DomainError("all arrays must share one shape and modulus")
    l1, l2 = shape
    if abs(tau1) >= l1 or abs(tau2) >= l2:
        return CorrelationValue.zero(modulus)
    x = np.stack([a.phases for a in first])
    y = np.stack([a.phases for a in second])
    if tau1 < 0 and tau2 < 0:
        return _grid_value(y, x, -tau1, -tau2, modulus).conjugate()
    return _grid_value(x, y, tau1, tau2, modulus)
