import pytest
from numpy import allclose

from skccm.encoder import ConjugationFunction
from skccm.experiment import ExperimentConfig, run_bound, emit_pdf_histogram, run_optimize
from skccm.experiment.config import ConfigError


@pytest.fixture
def bound_cfg():
    return ExperimentConfig(
        {"scheme": "ccm_mtm", "ccm.q": 3, "hpa.ibo_db": 6.0, "channel.ebn0_db": [0.0, 5.0, 10.0]}
    )


class TestRunBound:
    def test_table(self, bound_cfg):
        df = run_bound(bound_cfg)

        assert list(df.columns) == [
            "ebn0_db",
            "bound",
            "loop_id",
            "loop_length",
            "loop_weight",
            "contribution",
        ]
        n_loops = df["loop_id"].nunique()
        assert len(df) == 3 * n_loops

        totals = df.groupby("ebn0_db")["bound"].first()
        sums = df.groupby("ebn0_db")["contribution"].sum()
        assert allclose(totals, sums, rtol=1e-12)
        assert (totals.diff().dropna() < 0).all()
        assert df["loop_length"].between(3, 6).all()

    def test_explicit_conjugation(self, bound_cfg):
        ident = run_bound(bound_cfg)
        same = run_bound(bound_cfg, conj=ConjugationFunction.identity(8))

        assert allclose(ident["bound"], same["bound"], rtol=1e-12)

    def test_no_loops(self, bound_cfg):
        bound_cfg.update({"bound.l_min": 1, "bound.l_max": 2, "scheme": "ccm_bsm"})
        df = run_bound(bound_cfg)

        assert len(df) == 3
        assert (df["bound"] == 0.0).all()
        assert (df["loop_id"] == -1).all()

    def test_baseline(self):
        with pytest.raises(ConfigError):
            run_bound(ExperimentConfig({"scheme": "baseline"}))


class TestRunOptimize:
    def test_baseline(self):
        with pytest.raises(ConfigError):
            run_optimize(ExperimentConfig({"scheme": "baseline"}))

    def test_small(self):
        cfg = ExperimentConfig(
            {
                "scheme": "ccm_mtm",
                "ccm.q": 3,
                "hpa.ibo_db": 3.0,
                "optimizer.m": 9,
                "optimizer.max_iterations": 500,
                "optimizer.objective_tolerance": 1e-6,
            }
        )
        trace = run_optimize(cfg)

        assert trace.converged
        assert trace.final.m == 9
        assert trace.final_objective <= trace.iterations[0][0]


class TestEmitPdfHistogram:
    def test_uniform(self):
        cfg = ExperimentConfig({"ccm.q": 5})
        hist = emit_pdf_histogram(cfg, samples=200_000)

        assert len(hist) == 101
        assert hist["count"].sum() == 200_000
        occupied = hist["count"][hist["count"] > 0]
        assert occupied.size == 32
        assert occupied.max() / occupied.min() < 1.5
        assert (hist["density"] * (hist["bin_right"] - hist["bin_left"])).sum() == pytest.approx(1.0)

    def test_reproducible(self):
        cfg = ExperimentConfig({"ccm.q": 4, "scheme": "ccm_mtm"})
        a = emit_pdf_histogram(cfg, samples=10_000)

        assert a.equals(emit_pdf_histogram(cfg, samples=10_000))

    def test_zero_samples(self):
        hist = emit_pdf_histogram(ExperimentConfig(), samples=0)

        assert len(hist) == 101
        assert (hist["count"] == 0).all()
        assert (hist["density"] == 0).all()

    def test_negative(self):
        with pytest.raises(ValueError):
            emit_pdf_histogram(ExperimentConfig(), samples=-1)

    def test_baseline(self):
        with pytest.raises(ConfigError):
            emit_pdf_histogram(ExperimentConfig({"scheme": "baseline"}), samples=10)
