import numpy as np
import pytest

from msirs import rs_code


@pytest.fixture()
def rng() -> np.random.Generator:
    return np.random.default_rng(0xC0DE)


@pytest.fixture()
def small_code():
    """ RS(12,4) over GF(16): t = 4, the code the burst geometry tests are built on """
    return rs_code(12, 4, 4)
