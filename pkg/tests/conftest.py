import numpy as np
import pytest

from hyperrig.params import AlgebraId, AlgebraParams

MASTER = 0xC0FFEE


def make_params(algebra_id: AlgebraId, dimension: int, **kwargs) -> AlgebraParams:
    kwargs.setdefault("master_seed", MASTER)
    return AlgebraParams(algebra_id, dimension, **kwargs)


@pytest.fixture
def rng():
    return np.random.default_rng(7)
