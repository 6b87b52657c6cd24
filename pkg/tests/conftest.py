import os
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))
os.environ.setdefault("CCSEQ_LOG_TO_FILE", "false")
os.environ.setdefault("CCSEQ_THREADS", "1")

from src.core.algebra import PhaseArray2D, PhaseSequence, RadixProfile
from src.sequences.constructions import (
    GcpParams,
    IgcParams,
    build_igc_codeset,
    build_zcac,
    build_zcacs,
    enumerate_lambda_set,
)


# ---------- oráculos de punto flotante ---------- #

def naive_accf(x: np.ndarray, y: np.ndarray, tau: int) -> complex:
    """Doble lazo sobre las imágenes complejas."""
    total = 0j
    for i in range(len(x)):
        if 0 <= i + tau < len(y):
            total += x[i] * np.conj(y[i + tau])
    return total


def naive_accf_2d(x: np.ndarray, y: np.ndarray, tau1: int, tau2: int) -> complex:
    total = 0j
    l1, l2 = x.shape
    for i in range(l1):
        for j in range(l2):
            if 0 <= i + tau1 < l1 and 0 <= j + tau2 < l2:
                total += x[i, j] * np.conj(y[i + tau1, j + tau2])
    return total


def random_sequence(rng, modulus: int, length: int) -> PhaseSequence:
    return PhaseSequence(modulus, rng.integers(0, modulus, length))


def random_array(rng, modulus: int, shape) -> PhaseArray2D:
    return PhaseArray2D(modulus, rng.integers(0, modulus, shape))


# ---------- fixtures ---------- #

@pytest.fixture()
def rng():
    return np.random.default_rng(1234)


@pytest.fixture(scope="session")
def small_profile():
    return RadixProfile(((2, 2),), 2)


@pytest.fixture(scope="session")
def mixed_profile():
    return RadixProfile(((2, 2), (3, 2)), 6)


@pytest.fixture(scope="session")
def small_igc(small_profile):
    return build_igc_codeset(IgcParams(small_profile))


@pytest.fixture(scope="session")
def mixed_igc(mixed_profile):
    return build_igc_codeset(IgcParams(mixed_profile))


@pytest.fixture(scope="session")
def small_zcac(small_profile):
    quads = enumerate_lambda_set(small_profile)
    return build_zcac(IgcParams(small_profile), GcpParams(2, 2), quads[0])


@pytest.fixture(scope="session")
def mixed_zcacs(mixed_profile):
    quads = enumerate_lambda_set(mixed_profile)
    return build_zcacs(IgcParams(mixed_profile), GcpParams(2, 6), quads)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: barridos largos sobre conjuntos de 36 códigos")
