"""
Exact log-domain MAP (BCJR) decoding of chaos-coded blocks

skccm developers
"""
from dataclasses import dataclass
from math import inf, log

from numba import njit
from numpy import asarray, empty, float64, int8, ndarray, log2

from skccm.utility.internal import log_add

__all__ = [
    "DecoderConfig",
    "PosteriorBlock",
    "branch_metrics",
    "bit_llrs",
    "map_decode",
]

_METRICS = ("nominal", "hpa_aware")


class DecoderConfig:
    """
    MAP decoder settings.

    Parameters
    ----------
    metric_constellation : {"nominal", "hpa_aware"}, optional
        Expected branch samples. "nominal" uses the undistorted x(k); "hpa_aware" uses
        A g_NL(x(k)). Default is "nominal".
    termination : bool, optional
        Restrict the last Q trellis stages to zero-input branches. Default is True.
    """

    def __repr__(self):
        return (
            f"DecoderConfig(metric_constellation={self.metric_constellation!r}, "
            f"termination={self.termination!r})"
        )

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return (self.metric_constellation, self.termination) == (
                other.metric_constellation,
                other.termination,
            )
        return False

    def __init__(self, metric_constellation="nominal", termination=True):
        if metric_constellation not in _METRICS:
            raise ValueError(f"`metric_constellation` must be one of {_METRICS}.")
        self.metric_constellation = metric_constellation
        self.termination = bool(termination)


@dataclass(frozen=True)
class PosteriorBlock:
    """
    Attributes
    ----------
    llr : numpy.ndarray
        log P(b_n = 1 | r) - log P(b_n = 0 | r) per information bit.
    bits : numpy.ndarray
        Hard decisions, 1 where `llr` > 0.
    """

    llr: ndarray
    bits: ndarray


def branch_metrics(trellis, levels, r, sigma2, n_tail=0):
    """
    Log-likelihood of every branch at every stage.

    Parameters
    ----------
    trellis : skccm.encoder.Trellis
        Trellis tables.
    levels : numpy.ndarray
        Expected received sample for each output state.
    r : numpy.ndarray
        Received samples.
    sigma2 : float
        Noise variance.
    n_tail : int, optional
        Number of final stages restricted to zero-input branches. Default is 0.

    Returns
    -------
    gamma : numpy.ndarray
        (len(r), n_states, 2) metrics -(r_n - c)**2 / (2 sigma2), -inf on pruned
        branches.
    """
    c = asarray(levels, dtype=float64)[trellis.output_state]
    d = asarray(r, dtype=float64)[:, None, None] - c[None, :, :]
    gamma = (-0.5 / sigma2) * d * d
    if n_tail > 0:
        gamma[-n_tail:, :, 1] = -inf
    return gamma


@njit(cache=True)
def _forward_backward(next_state, gamma):  # pragma: no cover
    n, n_states = gamma.shape[0], gamma.shape[1]

    a = empty((n + 1, n_states), dtype=float64)
    a[0, :] = -log(n_states)
    for t in range(n):
        a[t + 1, :] = -inf
        for k in range(n_states):
            for b in range(2):
                j = next_state[k, b]
                a[t + 1, j] = log_add(a[t + 1, j], a[t, k] + gamma[t, k, b])
        a[t + 1, :] -= a[t + 1, :].max()

    bt = empty((n + 1, n_states), dtype=float64)
    bt[n, :] = 0.0
    for t in range(n - 1, -1, -1):
        for k in range(n_states):
            acc = -inf
            for b in range(2):
                acc = log_add(acc, gamma[t, k, b] + bt[t + 1, next_state[k, b]])
            bt[t, k] = acc
        bt[t, :] -= bt[t, :].max()

    llr = empty(n, dtype=float64)
    for t in range(n):
        l0 = -inf
        l1 = -inf
        for k in range(n_states):
            v0 = a[t, k] + gamma[t, k, 0] + bt[t + 1, next_state[k, 0]]
            v1 = a[t, k] + gamma[t, k, 1] + bt[t + 1, next_state[k, 1]]
            l0 = log_add(l0, v0)
            l1 = log_add(l1, v1)
        llr[t] = l1 - l0
    return llr


def bit_llrs(trellis, gamma):
    """
    Forward-backward posterior log-ratios of the input bit at every stage, with a
    uniform prior on the initial state and on the input bits.

    Parameters
    ----------
    trellis : skccm.encoder.Trellis
    gamma : numpy.ndarray
        Branch metrics from :func:`branch_metrics`.

    Returns
    -------
    llr : numpy.ndarray
        Per-stage log-ratios; -inf on stages where the 1-branches are pruned.
    """
    return _forward_backward(trellis.next_state, asarray(gamma, dtype=float64))


def map_decode(trellis, conj, cfg, noise, r, hpa=None, n_info=None):
    """
    MAP decode a received chaos-coded block.

    Parameters
    ----------
    trellis : skccm.encoder.Trellis
        Encoder trellis.
    conj : skccm.encoder.ConjugationFunction
        Conjugation function of the encoder.
    cfg : DecoderConfig
        Decoder settings.
    noise : skccm.channel.NoiseModel
        Channel noise model, sigma2 > 0.
    r : array-like
        Received samples, information plus Q tail samples when termination is on.
    hpa : {None, skccm.channel.HpaModel}, optional
        Normalized amplifier, required for the "hpa_aware" metric.
    n_info : {None, int}, optional
        Expected number of information bits, checked against the length of `r`.

    Returns
    -------
    post : PosteriorBlock
        Log-ratios and decisions for the information bits only.
    """
    r = asarray(r, dtype=float64)
    q = int(log2(trellis.n_states))
    n_tail = q if cfg.termination else 0

    if noise.sigma2 <= 0:
        raise ValueError("MAP decoding needs a positive noise variance.")
    if n_info is None:
        n_info = r.size - n_tail
    if n_info < 1 or r.size != n_info + n_tail:
        raise ValueError(
            f"Received length {r.size} does not match {n_info} information bits "
            f"plus {n_tail} tail bits."
        )

    levels = conj.levels(q)
    if cfg.metric_constellation == "hpa_aware":
        if hpa is None:
            raise ValueError("The 'hpa_aware' metric needs the amplifier model.")
        levels = hpa.amplify(levels)

    gamma = branch_metrics(trellis, levels, r, noise.sigma2, n_tail)
    llr = bit_llrs(trellis, gamma)[:n_info]
    return PosteriorBlock(llr=llr, bits=(llr > 0).astype(int8))
