"""
Additive white Gaussian noise calibrated in Eb/N0

skccm developers
"""
from dataclasses import dataclass

from numpy import asarray, sqrt, isinf, float64, ndarray

from skccm.utility.internal import db_to_linear, keyed_rng

__all__ = ["NoiseModel", "ChannelOutput", "transmit"]


class NoiseModel:
    """
    AWGN with variance set from Eb/N0 for one information bit per channel sample,
    Eb/N0 = P / (2 sigma2).

    Parameters
    ----------
    ebn0_db : float
        Eb/N0 in dB. `inf` gives a noiseless channel (sigma2 = 0).
    p : float
        Power of the transmitted scheme, E[x**2].
    seed : int, optional
        Master seed of the noise streams. Default is 0.
    """

    def __repr__(self):
        return f"NoiseModel(ebn0_db={self.ebn0_db!r}, p={self.p!r}, seed={self.seed!r})"

    def __init__(self, ebn0_db, p, seed=0):
        if not p > 0:
            raise ValueError("Signal power `p` must be positive.")
        self.ebn0_db = float(ebn0_db)
        self.p = float(p)
        self.seed = int(seed)

        if isinf(self.ebn0_db) and self.ebn0_db > 0:
            self.sigma2 = 0.0
        else:
            self.sigma2 = self.p / (2.0 * float(db_to_linear(self.ebn0_db)))

    @property
    def ebn0(self):
        """Linear Eb/N0."""
        return float(db_to_linear(self.ebn0_db))

    def rng(self, *key):
        """Independent generator for the noise stream identified by `key`."""
        return keyed_rng(self.seed, *key)


@dataclass(frozen=True)
class ChannelOutput:
    y: ndarray
    r: ndarray


def transmit(hpa, noise, x, key=(), rng=None):
    """
    Pass samples through the amplifier and the AWGN channel.

    Parameters
    ----------
    hpa : skccm.channel.HpaModel
        Amplifier, with its output normalization set.
    noise : NoiseModel
        Noise calibrated with the power of the transmitting scheme.
    x : array-like
        Transmitted samples.
    key : tuple of int, optional
        Noise stream key, eg (Eb/N0 index, block index). Ignored if `rng` is given.
    rng : {None, numpy.random.Generator}, optional
        Explicit generator for the noise draws.

    Returns
    -------
    out : ChannelOutput
        y = A g_NL(x) and r = y + n, both the length of `x`.
    """
    y = asarray(hpa.amplify(asarray(x, dtype=float64)), dtype=float64)
    if noise.sigma2 == 0.0:
        return ChannelOutput(y=y, r=y.copy())

    if rng is None:
        rng = noise.rng(*key)
    r = y + sqrt(noise.sigma2) * rng.standard_normal(y.size)
    return ChannelOutput(y=y, r=r)
