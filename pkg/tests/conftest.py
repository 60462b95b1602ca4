"""Shared fixtures: the tabulated reference potential and a family-B partner."""

import numpy as np
import pytest

from tra_spectra.models import PotentialFamily, PotentialSpec
from tra_spectra.physics import REFERENCE_EXACT, REFERENCE_SPEC, derive_params


@pytest.fixture
def reference_spec() -> PotentialSpec:
    return REFERENCE_SPEC


@pytest.fixture
def reference_exact_eps() -> np.ndarray:
    """Tabulated levels as dimensionless eps (negative)."""
    return -np.array(REFERENCE_EXACT)


@pytest.fixture
def reference_params():
    return derive_params(REFERENCE_SPEC, N=10)


@pytest.fixture
def family_b_spec() -> PotentialSpec:
    # nu = -sqrt(120.25) leaves room for the negative-root basis up to N = 5
    return PotentialSpec(PotentialFamily.B, v0=120.0, vs=20.0)


@pytest.fixture
def zero_spec() -> PotentialSpec:
    return PotentialSpec(PotentialFamily.A, v0=0.0, vs=0.0)
