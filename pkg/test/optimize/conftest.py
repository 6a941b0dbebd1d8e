import pytest

from skccm.bound import enumerate_loops
from skccm.channel import HpaModel
from skccm.encoder import stationary_distribution


@pytest.fixture(scope="module")
def mtm3_problem(mtm3):
    stats = stationary_distribution(mtm3)
    hpa = HpaModel(ibo_db=3.0, backoff_reference="peak")
    return mtm3, hpa, enumerate_loops(mtm3.trellis, 3), stats


@pytest.fixture(scope="module")
def bsm5_problem(bsm5):
    stats = stationary_distribution(bsm5)
    return bsm5, HpaModel(ibo_db=3.0), enumerate_loops(bsm5.trellis, 5), stats
