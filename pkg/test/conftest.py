import pytest
from numpy.random import default_rng

from skccm.encoder import CcmEncoder, MapKind


def pytest_addoption(parser):
    parser.addoption(
        "--run_slow",
        action="store_true",
        default=False,
        help="run slow tests",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: mark test as slow")


def pytest_collection_modifyitems(config, items):
    if not config.getoption("--run_slow"):
        skip_slow = pytest.mark.skip(reason="need --run_slow option to run")
        for item in items:
            if "slow" in item.keywords:
                item.add_marker(skip_slow)


@pytest.fixture(scope="package")
def np_rng():
    return default_rng(2024)


@pytest.fixture(scope="package")
def bsm5():
    return CcmEncoder(5, map=MapKind.BSM)


@pytest.fixture(scope="package")
def bsm3():
    return CcmEncoder(3, map=MapKind.BSM)


@pytest.fixture(scope="package")
def mtm3():
    return CcmEncoder(3, map=MapKind.MTM)


@pytest.fixture(scope="package")
def bsm2():
    return CcmEncoder(2, map=MapKind.BSM)
