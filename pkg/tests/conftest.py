import numpy as np
import pytest

from frobquot.field import PrimeField


@pytest.fixture
def K():
    return PrimeField(5)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
