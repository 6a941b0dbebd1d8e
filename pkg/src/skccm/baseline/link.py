"""
Uncompensated 4-PAM + convolutional code link over the amplifier channel

skccm developers
"""
from numpy import full

from skccm.encoder.core import StationaryStats
from skccm.channel.amplifier import compute_norm
from skccm.channel.awgn import transmit
from skccm.decoding.viterbi import viterbi_decode
from skccm.baseline.convcode import ConvCode, cc_encode
from skccm.baseline.pam import PamMapper, pam_map
from skccm.utility.internal import as_bits

__all__ = ["BaselineLink", "run_baseline"]


class BaselineLink:
    """
    Classical comparison system: rate 1/2 convolutional code, Gray 4-PAM, the same
    amplifier and AWGN channel, soft Viterbi decoding against the nominal levels.

    Parameters
    ----------
    hpa : skccm.channel.HpaModel
        Amplifier. Its output normalization is recomputed for the 4-PAM points.
    code : {None, ConvCode}, optional
        Default is the (133, 171) K = 7 code.
    mapper : {None, PamMapper}, optional
        Default is unit-power Gray 4-PAM.
    """

    #: average power of the transmitted symbols, used to calibrate the noise
    power = 1.0

    def __repr__(self):
        return f"BaselineLink(hpa={self.hpa!r}, code={self.code!r})"

    def __init__(self, hpa, code=None, mapper=None):
        self.code = ConvCode() if code is None else code
        self.mapper = PamMapper() if mapper is None else mapper

        stats = StationaryStats(dist=full(4, 0.25), p=self.mapper.power)
        self.hpa = hpa.with_norm(compute_norm(hpa, stats, self.mapper.points))
        self.trellis = self.code.trellis(self.mapper.points)

    def transmit_block(self, bits, noise, rng):
        """
        Encode, map, amplify and add noise to one block.

        Returns
        -------
        r : numpy.ndarray
            Received symbols, one per information or tail bit.
        """
        symbols = pam_map(self.mapper, cc_encode(self.code, bits))
        return transmit(self.hpa, noise, symbols, rng=rng).r

    def decode_block(self, r, n_info):
        return viterbi_decode(self.trellis, r, n_info=n_info)

    def run_block(self, bits, noise, rng):
        """
        Send one block of information bits and return the decoded bits.
        """
        return self.decode_block(self.transmit_block(bits, noise, rng), len(bits))


def run_baseline(code, mapper, hpa, noise, bits, rng=None):
    """
    Send one block through the baseline link.

    Parameters
    ----------
    code : ConvCode
    mapper : PamMapper
    hpa : skccm.channel.HpaModel
    noise : skccm.channel.NoiseModel
        Calibrated with P = 1 (unit-power symbols, one information bit per symbol).
    bits : array-like
        Information bits.
    rng : {None, numpy.random.Generator}, optional
        Noise generator. Default is the noise model's stream with an empty key.

    Returns
    -------
    decoded : numpy.ndarray
        Decoded information bits.
    """
    bits = as_bits(bits)
    link = BaselineLink(hpa, code=code, mapper=mapper)
    if rng is None:
        rng = noise.rng()
    r = link.transmit_block(bits, noise, rng)
    return link.decode_block(r, bits.size)
