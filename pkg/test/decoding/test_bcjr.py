from itertools import product

import pytest
from numpy import array, inf, isinf, array_equal, zeros, full, int8
from scipy.special import logsumexp

from skccm.encoder import encode_block, terminate_block, ConjugationFunction
from skccm.channel import NoiseModel, HpaModel, transmit
from skccm.decoding import DecoderConfig, branch_metrics, map_decode


def brute_force_llr(encoder, r, sigma2, n_info, termination):
    """Posterior log-ratios by enumerating every start state and information word."""
    num = [[] for _ in range(n_info)]
    den = [[] for _ in range(n_info)]
    for start in range(encoder.n_states):
        for word in product((0, 1), repeat=n_info):
            bits = array(word, dtype=int8)
            if termination:
                bits = terminate_block(encoder, bits)
            x = encode_block(encoder, bits, initial_state=start).x
            metric = -((r - x) ** 2).sum() / (2 * sigma2)
            for t, b in enumerate(word):
                (num if b else den)[t].append(metric)
    return array([logsumexp(n) - logsumexp(d) for n, d in zip(num, den)])


class TestDecoderConfig:
    def test_invalid(self):
        with pytest.raises(ValueError):
            DecoderConfig(metric_constellation="exact")

    def test_eq(self):
        assert DecoderConfig() == DecoderConfig("nominal", True)
        assert DecoderConfig() != DecoderConfig(termination=False)


class TestBranchMetrics:
    def test_values(self, bsm2):
        levels = bsm2.levels
        gamma = branch_metrics(bsm2.trellis, levels, array([0.1, -0.2, 0.3]), 0.5, n_tail=1)

        assert gamma.shape == (3, 4, 2)
        c = levels[bsm2.trellis.output_state[1, 0]]
        assert gamma[0, 1, 0] == pytest.approx(-((0.1 - c) ** 2), rel=1e-14)
        assert isinf(gamma[-1, :, 1]).all()
        assert not isinf(gamma[:-1]).any()


class TestMapDecode:
    @pytest.mark.parametrize("termination", (True, False))
    @pytest.mark.parametrize("encoder_name", ("bsm2", "bsm3", "mtm3"))
    def test_brute_force(self, encoder_name, request, np_rng, termination):
        conj = ConjugationFunction([0.0, 0.15, 0.6, 0.7, 1.0])
        enc = request.getfixturevalue(encoder_name).with_conjugation(conj)
        noise = NoiseModel(0.0, 1.0)
        assert noise.sigma2 == 0.5

        info = np_rng.integers(0, 2, 6)
        bits = terminate_block(enc, info) if termination else info
        x = encode_block(enc, bits, initial_state=2).x
        r = x + np_rng.normal(scale=0.7, size=x.size)

        post = map_decode(enc.trellis, conj, DecoderConfig(termination=termination), noise, r)
        expected = brute_force_llr(enc, r, 0.5, 6, termination)

        assert post.llr.size == 6
        assert post.llr == pytest.approx(expected, rel=1e-9, abs=1e-9)
        assert array_equal(post.bits, (expected > 0).astype(int8))

    def test_high_snr(self, bsm5, np_rng):
        info = np_rng.integers(0, 2, 500)
        bits = terminate_block(bsm5, info)
        r = encode_block(bsm5, bits, initial_state=9).x
        noise = NoiseModel(60.0, 1.0)

        post = map_decode(bsm5.trellis, bsm5.conj, DecoderConfig(), noise, r, n_info=500)
        assert array_equal(post.bits, info)

    def test_no_information(self, bsm3):
        noise = NoiseModel(-60.0, 1.0)
        r = zeros(23)

        post = map_decode(bsm3.trellis, bsm3.conj, DecoderConfig(), noise, r)
        assert abs(post.llr).max() < 1e-3

    def test_hpa_aware(self, bsm3, np_rng):
        hpa = HpaModel(ibo_db=0.0, a_norm=1.3)
        info = np_rng.integers(0, 2, 100)
        x = encode_block(bsm3, terminate_block(bsm3, info)).x
        noise = NoiseModel(inf, 1.0)
        r = transmit(hpa, noise, x).r

        cfg = DecoderConfig(metric_constellation="hpa_aware")
        post = map_decode(bsm3.trellis, bsm3.conj, cfg, NoiseModel(40.0, 1.0), r, hpa=hpa)
        assert array_equal(post.bits, info)

    def test_errors(self, bsm3):
        noise = NoiseModel(5.0, 1.0)
        cfg = DecoderConfig()

        with pytest.raises(ValueError, match="does not match"):
            map_decode(bsm3.trellis, bsm3.conj, cfg, noise, zeros(10), n_info=10)
        with pytest.raises(ValueError, match="does not match"):
            map_decode(bsm3.trellis, bsm3.conj, cfg, noise, zeros(3))
        with pytest.raises(ValueError, match="positive noise"):
            map_decode(bsm3.trellis, bsm3.conj, cfg, NoiseModel(inf, 1.0), zeros(10))
        with pytest.raises(ValueError, match="amplifier"):
            map_decode(
                bsm3.trellis, bsm3.conj, DecoderConfig("hpa_aware"), noise, full(10, 0.1)
            )
