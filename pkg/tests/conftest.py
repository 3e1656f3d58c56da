"""Shared fixtures and draw helpers for the test suite."""

import numpy as np
import pytest

from pnumrad import EnsembleSpec, derive_seed, sample


def draw(kind: str, n: int, *seed_parts) -> np.ndarray:
    """Deterministic ensemble draw keyed by arbitrary seed parts."""
    return sample(EnsembleSpec(kind=kind, n=n, seed=derive_seed("tests", *seed_parts)))


@pytest.fixture
def j2() -> np.ndarray:
    """The 2x2 nilpotent shift [[0, 1], [0, 0]]."""
    return np.array([[0.0, 1.0], [0.0, 0.0]], dtype=np.complex128)


@pytest.fixture
def i2() -> np.ndarray:
    return np.eye(2, dtype=np.complex128)
