from math import erfc, sqrt

import pytest
from numpy import allclose, array, linspace

from skccm.encoder import ConjugationFunction, stationary_distribution
from skccm.channel import HpaModel, IdealAmplifier, compute_norm
from skccm.bound import (
    StagedBound,
    d_eq,
    pep,
    union_bound,
    enumerate_loops,
)


def classical_bound(loops, levels, p, ebn0):
    """Union bound of an undistorted channel, instance by instance."""
    total = 0.0
    for lp in loops:
        for i in range(lp.n_instances):
            diff = levels[lp.paths[i]] - levels[lp.alt_paths[i]]
            d = sqrt(float((diff**2).sum()))
            w = lp.weight / 2 ** (len(levels).bit_length() - 1 + lp.length)
            total += w * 0.5 * erfc(d / (2 * sqrt(p)) * sqrt(ebn0))
    return total


class TestDEq:
    def test_values(self):
        assert d_eq([0.1], [0.0], [2.0]) == pytest.approx(1.8, rel=1e-12)
        assert d_eq([1.0], [0.0], [1.0]) == pytest.approx(-1.0, rel=1e-12)

    def test_undistorted(self, np_rng):
        x = np_rng.uniform(-1, 1, 6)
        xa = np_rng.uniform(-1, 1, 6)

        assert d_eq(x, x, xa) == pytest.approx(sqrt(((x - xa) ** 2).sum()), rel=1e-12)

    def test_errors(self):
        with pytest.raises(ValueError, match="identical"):
            d_eq([0.1, 0.2], [0.0, 0.5], [0.0, 0.5])
        with pytest.raises(ValueError):
            d_eq([0.1], [0.0, 0.5], [0.0, 0.1])


class TestPep:
    def test_values(self):
        assert pep(0.0, 0.3, 7.0) == 0.5
        assert pep(2.0, 1.0, 0.0) == pytest.approx(0.0786496, abs=1e-7)
        assert pep(-1.0, 1.0, 3.0) > 0.5

    def test_array(self):
        res = pep(array([0.0, 1.0, 2.0]), 1.0, 5.0)
        assert res.shape == (3,)
        assert (res[1:] < res[:-1]).all()

    def test_invalid_power(self):
        with pytest.raises(ValueError):
            pep(1.0, 0.0, 3.0)


class TestUnionBound:
    @pytest.mark.parametrize("fixture", ("bsm3", "mtm3"))
    @pytest.mark.parametrize("ebn0_db", (4.0, 10.0))
    def test_classical_reduction(self, fixture, ebn0_db, request):
        enc = request.getfixturevalue(fixture)
        loops = enumerate_loops(enc.trellis, 3)
        stats = stationary_distribution(enc)

        res = union_bound(loops, enc.conj, IdealAmplifier(), stats, ebn0_db)
        expected = classical_bound(loops, enc.levels, stats.p, 10 ** (ebn0_db / 10))

        assert res.value == pytest.approx(expected, rel=1e-12)
        assert res.per_loop.sum() == pytest.approx(res.value, rel=1e-12)
        assert res.per_loop.size == len(loops)

    def test_matches_instance_distances(self, mtm3):
        conj = ConjugationFunction([0.0, 0.1, 0.45, 0.5, 1.0])
        enc = mtm3.with_conjugation(conj)
        loops = enumerate_loops(enc.trellis, 3)
        stats = stationary_distribution(enc)
        hpa = HpaModel(ibo_db=1.0)

        staged = StagedBound(loops, stats.dist)
        d, loop_id = staged.distances(enc.levels, hpa)

        y = hpa.amplify(enc.levels) * compute_norm(hpa, stats, enc.levels)
        lp = loops[0]
        expected = array(
            [
                d_eq(y[lp.paths[i]], enc.levels[lp.paths[i]], enc.levels[lp.alt_paths[i]])
                for i in range(lp.n_instances)
            ]
        )
        rows = d[loop_id == 0]
        assert all(abs(expected - v).min() < 1e-10 for v in rows)
        assert all(abs(rows - v).min() < 1e-10 for v in expected)

    def test_decreasing(self, bsm3):
        loops = enumerate_loops(bsm3.trellis, 3)
        stats = stationary_distribution(bsm3)
        hpa = HpaModel(ibo_db=3.0)

        values = [union_bound(loops, bsm3.conj, hpa, stats, e).value for e in (0, 4, 8, 12)]
        assert all(a > b for a, b in zip(values[:-1], values[1:]))

    def test_degradation(self, bsm3):
        loops = enumerate_loops(bsm3.trellis, 3)
        stats = stationary_distribution(bsm3)

        linear = union_bound(loops, bsm3.conj, HpaModel(ibo_db=40.0), stats, 12.0)
        compressed = union_bound(loops, bsm3.conj, HpaModel(ibo_db=0.0), stats, 12.0)
        assert compressed.value > linear.value

    def test_empty(self, bsm3):
        stats = stationary_distribution(bsm3)
        res = union_bound([], bsm3.conj, HpaModel(), stats, 5.0)

        assert res.value == 0.0
        assert res.per_loop.size == 0

    def test_level_shape(self, bsm3):
        staged = StagedBound(enumerate_loops(bsm3.trellis, 3), stationary_distribution(bsm3).dist)
        with pytest.raises(ValueError):
            staged.value(linspace(-1, 1, 4), HpaModel(), 5.0)


class TestStagedGradient:
    @pytest.mark.parametrize(
        "hpa", (HpaModel(ibo_db=3.0), HpaModel(ibo_db=0.0), IdealAmplifier())
    )
    def test_adjoint_matches_differences(self, mtm3, hpa):
        enc = mtm3.with_conjugation(ConjugationFunction([0.0, 0.2, 0.35, 0.6, 1.0]))
        staged = StagedBound(enumerate_loops(enc.trellis, 3), stationary_distribution(enc).dist)

        exact = staged.gradient(enc.levels, hpa, 6.0)
        fd = staged.gradient(enc.levels, hpa, 6.0, step=1e-6)

        assert allclose(exact, fd, rtol=1e-5, atol=1e-9)

    def test_empty(self, bsm3):
        staged = StagedBound([], stationary_distribution(bsm3).dist)

        assert (staged.gradient(bsm3.levels, HpaModel(), 5.0) == 0.0).all()
        assert staged.value(bsm3.levels, HpaModel(), 5.0) == 0.0
