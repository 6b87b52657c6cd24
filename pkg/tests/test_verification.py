import numpy as np
import pytest

from conftest import naive_accf, naive_accf_2d
from src.core.algebra import PhaseArray2D, PhaseCode, PhaseSequence, RadixProfile
from src.core.config import settings
from src.core.errors import DomainError, ParameterError, RangeError
from src.schemas.report import ClaimKind
from src.sequences.constructions import IgcParams, build_igc_codeset
from src.sequences.correlation import ShiftGrid
from src.sequences.verification import (
    bound_report,
    verify_gcp,
    verify_igc,
    verify_zcac,
    verify_zcacs,
    verify_zccs,
    verify_zccs_bound,
    verify_zcp,
)


def _mutated(codes, index, row, col, delta):
    code = codes[index]
    rows = code.rows.copy()
    rows[row, col] = (rows[row, col] + delta) % code.modulus
    mutated = list(codes)
    mutated[index] = PhaseCode(code.modulus, rows, code.label)
    return mutated


# ---------- pares ---------- #

def test_gcp_passes():
    report = verify_gcp(PhaseSequence(2, [0, 0, 0, 1]), PhaseSequence(2, [0, 1, 0, 0]))
    assert report.passed
    assert report.claim is ClaimKind.GCP
    assert report.peak == pytest.approx(8)


def test_identical_pair_is_not_complementary():
    a = PhaseSequence(2, [0, 0])
    report = verify_gcp(a, a)
    assert not report.passed
    assert report.violation_count == 1
    (violation,) = report.violations
    assert violation.shift == [1]
    assert violation.counts == [2, 0]
    assert report.peak == pytest.approx(4)


def test_zcp_with_partial_zone():
    a = PhaseSequence(2, [0, 0])
    report = verify_zcp(a, a, 1)
    assert report.passed and report.claim is ClaimKind.ZCP
    with pytest.raises(RangeError):
        verify_zcp(a, a, 3)
    with pytest.raises(DomainError):
        verify_gcp(a, PhaseSequence(2, [0, 0, 1]))


# ---------- conjuntos IGC ---------- #

def test_small_igc_passes(small_igc):
    report = verify_igc(small_igc, 2)
    assert report.passed
    assert report.peak == pytest.approx(8)
    assert report.params == {"K": 4, "M": 2, "L": 4, "Z": 2}


def test_small_igc_inflated_zone_fails_at_two(small_igc):
    report = verify_igc(small_igc, 3)
    assert not report.passed
    assert report.violations
    assert all(v.shift == [2] for v in report.violations)


def test_mixed_igc_passes(mixed_igc):
    report = verify_igc(mixed_igc, 6)
    assert report.passed
    assert report.peak == pytest.approx(216)
    assert report.params == {"K": 36, "M": 6, "L": 36, "Z": 6}
    assert report.max_residual < settings.float_tolerance * 216
    assert verify_zccs_bound(36, 6, 36, 6) == (True, True)


def test_igc_zone_is_monotone(small_igc):
    assert verify_igc(small_igc, 1).passed


def test_igc_zone_must_fit(small_igc):
    with pytest.raises(RangeError):
        verify_igc(small_igc, 5)
    with pytest.raises(RangeError):
        verify_igc(small_igc, 0)
    assert verify_igc(small_igc[:1], 4).passed is False


def test_single_code_set_passes(small_igc):
    assert verify_igc(small_igc[:1], 2).passed


def test_igc_needs_groups():
    code = PhaseCode(2, [[0, 1]])
    with pytest.raises(DomainError):
        verify_igc([code], 1)
    assert verify_igc([code], 1, groups=[0]).passed


def test_igc_is_not_a_plain_zccs_with_full_zone(small_igc):
    # Los grupos distintos son ortogonales en toda la ventana; dentro del grupo no
    assert verify_igc(small_igc, 2).passed
    assert verify_zccs(small_igc, 2).passed
    assert not verify_zccs(small_igc, 4).passed


def test_single_phase_mutations_are_detected_small(small_igc):
    rng = np.random.default_rng(99)
    for _ in range(60):
        index, row, col = int(rng.integers(4)), int(rng.integers(2)), int(rng.integers(4))
        report = verify_igc(_mutated(small_igc, index, row, col, 1), 2)
        assert not report.passed


@pytest.mark.slow
def test_single_phase_mutations_are_detected_mixed(mixed_igc):
    rng = np.random.default_rng(5)
    for _ in range(50):
        index, row, col = int(rng.integers(36)), int(rng.integers(6)), int(rng.integers(36))
        delta = int(rng.integers(1, 6))
        assert not verify_igc(_mutated(mixed_igc, index, row, col, delta), 6).passed


def _float_igc_verdict(codes, zcz):
    """Veredicto IGC con la imagen compleja y doble lazo."""
    images = [code.to_complex() for code in codes]
    rows, length = codes[0].shape
    for i, x in enumerate(images):
        for j, y in enumerate(images):
            limit = zcz if codes[i].label.t == codes[j].label.t else length
            for tau in range(limit):
                total = sum(naive_accf(x[r], y[r], tau) for r in range(rows))
                expected = rows * length if i == j and tau == 0 else 0
                if abs(total - expected) > 1e-9:
                    return False
    return True


@pytest.mark.parametrize("factors, modulus", [(((2, 2),), 2), (((3, 2),), 3), (((3, 2),), 6)])
def test_exact_verdict_agrees_with_float_oracle(factors, modulus):
    profile = RadixProfile(factors, modulus)
    codes = build_igc_codeset(IgcParams.random(profile, 8))
    rows, length = codes[0].shape
    rng = np.random.default_rng(modulus)
    candidates = [codes]
    for _ in range(6):
        index, row, col = int(rng.integers(len(codes))), int(rng.integers(rows)), int(rng.integers(length))
        candidates.append(_mutated(codes, index, row, col, int(rng.integers(1, modulus))))
    for candidate in candidates:
        for zcz in range(1, length + 1):
            assert verify_igc(candidate, zcz).passed == _float_igc_verdict(candidate, zcz)


def test_violation_cap_and_order(small_igc, monkeypatch):
    monkeypatch.setattr(settings, "violation_cap", 3)
    report = verify_zccs(small_igc, 4)
    assert len(report.violations) == 3
    assert report.violation_count > 3
    keys = [v.sort_key() for v in report.violations]
    assert keys == sorted(keys)


def test_threads_do_not_change_reports(small_igc, monkeypatch):
    single = verify_igc(small_igc, 3)
    monkeypatch.setattr(settings, "threads", 4)
    assert verify_igc(small_igc, 3) == single


@pytest.mark.parametrize(
    "args, expected",
    [
        ((36, 6, 36, 6), (True, True)),
        ((4, 2, 4, 2), (True, True)),
        ((5, 2, 4, 2), (False, False)),
        ((3, 2, 4, 2), (True, False)),
    ],
)
def test_zccs_bound(args, expected):
    assert verify_zccs_bound(*args) == expected


def test_zccs_bound_rejects_zone_beyond_length():
    with pytest.raises(ParameterError):
        verify_zccs_bound(4, 2, 4, 5)
    assert bound_report(4, 2, 4, 2).passed


def test_bound_report_lists_its_violation():
    report = bound_report(5, 2, 4, 2)
    assert not report.passed
    assert report.violation_count == 1
    (violation,) = report.violations
    assert violation.counts == [5]
    assert violation.expected == 4
    assert report.claim is ClaimKind.BOUND


# ---------- arreglos 2-D ---------- #

def test_small_zcac_passes(small_zcac):
    report = verify_zcac(small_zcac, 4, 2)
    assert report.passed
    assert report.peak == pytest.approx(64)
    assert report.params == {"M": 2, "L1": 4, "L2": 8, "Z1": 4, "Z2": 2}


def test_small_zcac_agrees_with_float_oracle(small_zcac):
    images = [arr.to_complex() for arr in small_zcac]
    for tau1, tau2 in ShiftGrid.zcz(4, 2):
        total = sum(naive_accf_2d(x, x, tau1, tau2) for x in images)
        expected = 64 if (tau1, tau2) == (0, 0) else 0
        assert abs(total - expected) < 1e-9


def test_trivial_array_passes():
    report = verify_zcac([PhaseArray2D(2, [[0]])], 1, 1)
    assert report.passed
    assert report.peak == pytest.approx(1)


def test_zcac_mutation_fails(small_zcac):
    phases = small_zcac[0].phases.copy()
    phases[1, 3] = (phases[1, 3] + 1) % 2
    mutated = [PhaseArray2D(2, phases), small_zcac[1]]
    assert not verify_zcac(mutated, 4, 2).passed


def test_zcac_zone_must_fit(small_zcac):
    with pytest.raises(RangeError):
        verify_zcac(small_zcac, 5, 2)


def test_mixed_zcacs_passes(mixed_zcacs):
    report = verify_zcacs(mixed_zcacs, 4, 6)
    assert report.passed
    assert report.params["sets"] == 3
    assert report.peak == pytest.approx(6 * 4 * 72)
    for arrays in mixed_zcacs:
        assert verify_zcac(arrays, 4, 6).passed


def test_zcacs_of_one_set_matches_zcac(small_zcac):
    assert verify_zcacs([small_zcac], 4, 2).passed == verify_zcac(small_zcac, 4, 2).passed


def test_duplicated_member_fails_at_origin(small_zcac):
    report = verify_zcacs([small_zcac, small_zcac], 4, 2)
    assert not report.passed
    assert any(v.ids == [0, 1] and v.shift == [0, 0] for v in report.violations)


def test_zcacs_shape_mismatch(small_zcac, mixed_zcacs):
    with pytest.raises(DomainError):
        verify_zcacs([small_zcac, mixed_zcacs[0]], 1, 1)
