import pytest

from skccm.experiment import ExperimentConfig


@pytest.fixture
def small_cfg():
    return ExperimentConfig(
        {
            "scheme": "ccm_bsm",
            "ccm.q": 3,
            "channel.ebn0_db": [0.0, 60.0],
            "channel.seed": 11,
            "sim.block_info_bits": 200,
            "sim.stop_min_errors": 20,
            "sim.stop_max_bits": 2000,
        }
    )


@pytest.fixture
def write_cfg(tmp_path):
    def write(text, name="run.cfg"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write
