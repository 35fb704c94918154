import numpy as np
import pytest

from qwhorl.core import OscillatorParams


@pytest.fixture
def params():
    """Default natural-units parameters with q = 0.5."""
    return OscillatorParams()


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
