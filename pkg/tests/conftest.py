import numpy as np
import pytest

from photonflow import GridSpec


@pytest.fixture
def rng():
    return np.random.default_rng(20260817)


@pytest.fixture
def spec16():
    return GridSpec(16, 2.0 * np.pi)


@pytest.fixture
def spec8():
    return GridSpec(8, 2.0 * np.pi)
