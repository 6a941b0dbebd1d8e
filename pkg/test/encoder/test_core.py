from fractions import Fraction

import pytest
from numpy import arange, allclose, array_equal, zeros, ones, int8

from skccm.encoder import (
    CcmEncoder,
    ConjugationFunction,
    ConvergenceError,
    MapKind,
    encode_block,
    terminate_block,
    stationary_distribution,
)


class TestCcmEncoder:
    def test_defaults(self, bsm5):
        assert bsm5.n_states == 32
        assert bsm5.map is MapKind.BSM
        assert bsm5.conj.m == 32

    def test_invalid_q(self):
        with pytest.raises(ValueError):
            CcmEncoder(0)

    def test_with_conjugation_shares_trellis(self, bsm5):
        tr = bsm5.trellis
        enc = bsm5.with_conjugation(ConjugationFunction([0.0, 0.8, 1.0]))

        assert enc.trellis is tr
        assert enc.conj.m == 2


class TestEncodeBlock:
    def test_identity_levels(self, bsm5, np_rng):
        bits = np_rng.integers(0, 2, 200)
        seq = encode_block(bsm5, bits, initial_state=7)

        assert len(seq) == 200
        assert allclose(seq.x, 2 * seq.z / 32 - 1)
        assert allclose(seq.s, seq.z / 32)

    def test_all_zero(self, bsm5):
        seq = encode_block(bsm5, zeros(50, dtype=int8))

        assert (seq.z == 0).all()
        assert (seq.x == -1.0).all()

    def test_matches_shift_register(self, bsm5, np_rng):
        bits = np_rng.integers(0, 2, 100)
        seq = encode_block(bsm5, bits)

        k = 0
        for b, z in zip(bits, seq.z):
            k = (2 * k + int(b)) % 32
            assert z == k

    def test_range(self, mtm3, np_rng):
        seq = encode_block(mtm3, np_rng.integers(0, 2, 500), initial_state=3)

        assert ((seq.z >= 0) & (seq.z < 8)).all()
        assert ((seq.x >= -1) & (seq.x <= 1)).all()

    @pytest.mark.parametrize(("bits", "state"), (([], 0), ([0, 1], 32), ([0, 1], -1)))
    def test_invalid(self, bsm5, bits, state):
        with pytest.raises(ValueError):
            encode_block(bsm5, bits, initial_state=state)


class TestTerminateBlock:
    def test_length(self, bsm5):
        assert terminate_block(bsm5, ones(10000, dtype=int8)).size == 10005

    def test_returns_to_zero(self, bsm5, np_rng):
        for start in (0, 13, 31):
            bits = terminate_block(bsm5, np_rng.integers(0, 2, 37))
            assert encode_block(bsm5, bits, initial_state=start).z[-1] == 0

    def test_empty(self, bsm5):
        with pytest.raises(ValueError):
            terminate_block(bsm5, [])


class TestStationaryDistribution:
    def test_bsm_power(self, bsm5):
        stats = stationary_distribution(bsm5)

        exact = sum((Fraction(2 * k, 32) - 1) ** 2 * Fraction(1, 32) for k in range(32))
        assert exact == Fraction(2736, 8192)
        assert allclose(stats.dist, 1 / 32, rtol=0, atol=1e-12)
        assert stats.p == pytest.approx(2736 / 8192, rel=1e-12)

    @pytest.mark.parametrize("kind", (MapKind.BSM, MapKind.MTM))
    @pytest.mark.parametrize("q", (2, 3, 5, 7))
    def test_sums_to_one(self, kind, q):
        stats = stationary_distribution(CcmEncoder(q, map=kind))

        assert abs(stats.dist.sum() - 1.0) < 1e-12
        assert (stats.dist >= 0).all()
        assert allclose(stats.dist, 1.0 / (1 << q), atol=1e-10)

    def test_power_of_levels(self, mtm3):
        conj = ConjugationFunction([0.0, 0.2, 0.7, 1.0])
        enc = mtm3.with_conjugation(conj)
        stats = stationary_distribution(enc)

        assert stats.p == pytest.approx(float(stats.dist @ enc.levels**2), rel=1e-14)
        assert stats.power(enc.levels) == pytest.approx(stats.p, rel=1e-14)

    def test_not_converged(self):
        def to_zero(state, bit, q):
            return state * 0

        with pytest.raises(ConvergenceError):
            stationary_distribution(CcmEncoder(3, map=to_zero), max_iter=1)

    def test_bad_map(self):
        def outside(state, bit, q):
            return state + 100

        with pytest.raises(ValueError, match="outside of the grid"):
            CcmEncoder(3, map=outside).trellis

    def test_levels_match_grid(self, bsm3):
        assert allclose(bsm3.levels, 2 * arange(8) / 8 - 1)
        assert array_equal(bsm3.trellis.output_state, bsm3.trellis.next_state)
