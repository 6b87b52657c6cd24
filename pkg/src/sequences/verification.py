"""
Exhaustive verifiers for the correlation properties of generated sets.

Verdicts are exact (cyclotomic zero test on root counts). Float magnitudes are
only carried into reports: `peak`, violation magnitudes and `max_residual`,
the largest |value| among values judged exactly zero.

Every scan runs over ordered pairs and non-negative 1-D shifts only, because
C(x, y)(−τ) is the conjugate of C(y, x)(τ) and conjugation preserves zeros.
2-D scans walk the whole ZCZ grid.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, TypeVar

from src.core.algebra import PhaseArray2D, PhaseCode, PhaseSequence
from src.core.config import settings
from src.core.errors import DomainError, ParameterError, RangeError
from src.schemas.report import ClaimKind, VerificationReport, Violation
from src.sequences.correlation import (
    CorrelationValue,
    ShiftGrid,
    aacf,
    code_accf,
    set_accf_2d,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

# (ids, shift, value, expected): expected is the required integer value
Check = tuple[tuple[int, ...], tuple[int, ...], CorrelationValue, int]


def _constant(modulus: int, value: int) -> CorrelationValue:
    counts = [0] * modulus
    counts[0] = value
    return CorrelationValue(modulus, tuple(counts))


def _parallel_map(fn: Callable[[T], R], items: Sequence[T]) -> list[R]:
    """Ordered map over a thread pool capped by CCSEQ_THREADS."""
    workers = min(settings.threads, max(len(items), 1))
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items))


@dataclass
class _Collector:
    """Merges check results into a VerificationReport."""
    violations: list[Violation] = field(default_factory=list)
    count: int = 0
    max_residual: float = 0.0
    peak: float | None = None
    warned: bool = False

    def add(self, checks: Iterable[Check]) -> None:
        for ids, shift, value, expected in checks:
            if expected:
                self.peak = value.complex.real
            difference = value - _constant(value.modulus, expected) if expected else value
            if difference.is_zero:
                residual = difference.magnitude
                self.max_residual = max(self.max_residual, residual)
                if residual > settings.float_tolerance * max(value.term_count, 1) and not self.warned:
                    logger.warning("Exact zero with float residual %.3g at %s %s", residual, ids, shift)
                    self.warned = True
                continue
            self.count += 1
            self.violations.append(
                Violation(
                    ids=list(ids),
                    shift=list(shift),
                    counts=list(value.counts),
                    magnitude=value.magnitude,
                    expected=expected,
                )
            )

    def report(self, claim: ClaimKind, params: dict[str, int], notes: list[str] | None = None) -> VerificationReport:
        kept = sorted(self.violations, key=Violation.sort_key)[: settings.violation_cap]
        report = VerificationReport(
            claim=claim,
            params=params,
            passed=self.count == 0,
            peak=self.peak,
            violations=kept,
            violation_count=self.count,
            max_residual=self.max_residual,
            notes=notes or [],
        )
        log = logger.info if report.passed else logger.warning
        log("Verificación %s", report.summary())
        return report


# ==================== PAIRS ==================== #

def verify_zcp(a: PhaseSequence, b: PhaseSequence, zcz: int) -> VerificationReport:
    """A(a)(τ) + A(b)(τ) = 0 for 0 < τ < Z; the peak at τ = 0 is 2L."""
    if a.modulus != b.modulus or len(a) != len(b):
        raise DomainError("a pair needs equal lengths and moduli")
    length = len(a)
    if not 1 <= zcz <= length:
        raise RangeError(f"Z must lie in [1, {length}], got {zcz}")

    collector = _Collector()
    collector.add(
        ((0, 1), (tau,), aacf(a, tau) + aacf(b, tau), 2 * length if tau == 0 else 0)
        for tau in range(zcz)
    )
    claim = ClaimKind.GCP if zcz == length else ClaimKind.ZCP
    return collector.report(claim, {"L": length, "Z": zcz})


def verify_gcp(a: PhaseSequence, b: PhaseSequence) -> VerificationReport:
    """Golay complementary pair: the ZCP check with Z = L."""
    return verify_zcp(a, b, len(a))


# ==================== 1-D CODE SETS ==================== #

def _check_codes(codes: Sequence[PhaseCode], zcz: int) -> tuple[int, int]:
    if not codes:
        raise DomainError("empty code set")
    shape, modulus = codes[0].shape, codes[0].modulus
    for code in codes:
        if code.shape != shape or code.modulus != modulus:
            raise DomainError("all codes must share one shape and modulus")
    rows, length = shape
    if zcz < 1:
        raise RangeError(f"Z must be positive, got {zcz}")
    ShiftGrid.window(zcz).validate(length)
    return rows, length


def _scan_codes(
    codes: Sequence[PhaseCode], zcz: int, groups: Sequence[int] | None, claim: ClaimKind
) -> VerificationReport:
    """
    Same code: peak M'L at τ = 0, zero for 0 < τ < Z. Codes in one group (or
    any two codes when groups is None): zero for 0 ≤ τ < Z. Codes in
    different groups: zero for every shift.
    """
    rows, length = _check_codes(codes, zcz)

    def pair_checks(pair: tuple[int, int]) -> list[Check]:
        i, j = pair
        if i == j:
            return [((i, j), (tau,), code_accf(codes[i], codes[j], tau), rows * length if tau == 0 else 0)
                    for tau in range(zcz)]
        limit = zcz if groups is None or groups[i] == groups[j] else length
        return [((i, j), (tau,), code_accf(codes[i], codes[j], tau), 0) for tau in range(limit)]

    pairs = [(i, j) for i in range(len(codes)) for j in range(len(codes))]
    logger.debug("Scanning %d ordered code pairs with %d threads", len(pairs), settings.threads)
    collector = _Collector()
    for checks in _parallel_map(pair_checks, pairs):
        collector.add(checks)

    params = {"K": len(codes), "M": rows, "L": length, "Z": zcz}
    notes = []
    if groups is not None:
        feasible, optimal = verify_zccs_bound(len(codes), rows, length, zcz)
        notes.append(f"K <= M*floor(L/Z): {feasible}; optimal: {optimal}")
    return collector.report(claim, params, notes)


def verify_zccs(codes: Sequence[PhaseCode], zcz: int) -> VerificationReport:
    """Z-complementary code set: every pair of codes is orthogonal for |τ| < Z."""
    return _scan_codes(codes, zcz, None, ClaimKind.ZCCS)


def verify_igc(codes: Sequence[PhaseCode], zcz: int, groups: Sequence[int] | None = None) -> VerificationReport:
    """
    Inter-group complementary code set. Groups come from the codes' labels
    (shared t) unless given explicitly as one group id per code.
    """
    if groups is None:
        if any(code.label is None for code in codes):
            raise DomainError("IGC verification needs group labels or explicit groups")
        keys: dict[tuple[int, ...], int] = {}
        groups = [keys.setdefault(code.label.t, len(keys)) for code in codes]
    elif len(groups) != len(codes):
        raise DomainError(f"{len(groups)} group ids for {len(codes)} codes")
    return _scan_codes(codes, zcz, list(groups), ClaimKind.IGC)


def verify_zccs_bound(k: int, m: int, length: int, zcz: int) -> tuple[bool, bool]:
    """K ≤ M⌊L/Z⌋ (feasible) and equality (optimal)."""
    if min(k, m, length, zcz) < 1 or zcz > length:
        raise ParameterError(f"need positive K, M, L, Z with Z <= L, got {(k, m, length, zcz)}")
    bound = m * (length // zcz)
    return k <= bound, k == bound


def bound_report(k: int, m: int, length: int, zcz: int) -> VerificationReport:
    """
    The set-size bound as a report. A violation carries K in `counts` and
    M⌊L/Z⌋ in `expected`.
    """
    feasible, optimal = verify_zccs_bound(k, m, length, zcz)
    bound = m * (length // zcz)
    violations = [] if feasible else [Violation(ids=[], shift=[], counts=[k], magnitude=float(k), expected=bound)]
    return VerificationReport(
        claim=ClaimKind.BOUND,
        params={"K": k, "M": m, "L": length, "Z": zcz},
        passed=feasible,
        violations=violations,
        violation_count=len(violations),
        notes=[f"M*floor(L/Z) = {bound}", f"optimal: {optimal}"],
    )


# ==================== 2-D ARRAY SETS ==================== #

def _check_arrays(sets: Sequence[Sequence[PhaseArray2D]], z1: int, z2: int) -> tuple[int, int, int]:
    if not sets or not sets[0]:
        raise DomainError("empty array set")
    size, shape, modulus = len(sets[0]), sets[0][0].shape, sets[0][0].modulus
    for arrays in sets:
        if len(arrays) != size:
            raise DomainError("all array sets must have the same number of arrays")
        for arr in arrays:
            if arr.shape != shape or arr.modulus != modulus:
                raise DomainError("all arrays must share one shape and modulus")
    l1, l2 = shape
    if min(z1, z2) < 1:
        raise RangeError(f"ZCZ {z1}x{z2} must be positive")
    ShiftGrid.zcz(z1, z2).validate(l1, l2)
    return size, l1, l2


def _scan_array_sets(
    sets: Sequence[Sequence[PhaseArray2D]], z1: int, z2: int, claim: ClaimKind
) -> VerificationReport:
    size, l1, l2 = _check_arrays(sets, z1, z2)
    grid = ShiftGrid.zcz(z1, z2)
    peak = size * l1 * l2

    def pair_checks(pair: tuple[int, int]) -> list[Check]:
        a, b = pair
        out = []
        for tau1, tau2 in grid:
            expected = peak if a == b and tau1 == 0 and tau2 == 0 else 0
            out.append(((a, b), (tau1, tau2), set_accf_2d(sets[a], sets[b], tau1, tau2), expected))
        return out

    pairs = [(a, b) for a in range(len(sets)) for b in range(len(sets))]
    collector = _Collector()
    for checks in _parallel_map(pair_checks, pairs):
        collector.add(checks)

    params = {"M": size, "L1": l1, "L2": l2, "Z1": z1, "Z2": z2}
    if claim is ClaimKind.ZCACS:
        params["sets"] = len(sets)
    return collector.report(claim, params)


def verify_zcac(arrays: Sequence[PhaseArray2D], z1: int, z2: int) -> VerificationReport:
    """Σ_i A(X_i)(τ1, τ2) is M·L1·L2 at the origin and 0 elsewhere in |τ1| < Z1, |τ2| < Z2."""
    return _scan_array_sets([list(arrays)], z1, z2, ClaimKind.ZCAC)


def verify_zcacs(codesets: Sequence[Sequence[PhaseArray2D]], z1: int, z2: int) -> VerificationReport:
    """
    Each member is a ZCAC, and Σ_i C(X_i^a, X_i^b)(τ1, τ2) vanishes for a ≠ b
    over the whole ZCZ grid, origin included.
    """
    return _scan_array_sets([list(s) for s in codesets], z1, z2, ClaimKind.ZCACS)
