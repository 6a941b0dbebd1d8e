"""
Soft-decision Viterbi decoding with squared Euclidean symbol metrics

skccm developers
"""
from math import inf

from numba import njit
from numpy import asarray, empty, full, float64, int64, int8

__all__ = ["viterbi_decode"]


@njit(cache=True)
def _viterbi(next_state, out_symbol, points, r, n_tail):  # pragma: no cover
    n_states = next_state.shape[0]
    n = r.size

    pm = full(n_states, inf)
    pm[0] = 0.0
    prev = empty((n, n_states), dtype=int64)
    inp = empty((n, n_states), dtype=int8)

    for t in range(n):
        new = full(n_states, inf)
        n_in = 1 if t >= n - n_tail else 2
        # ascending state order with a strict comparison keeps the smallest predecessor
        for k in range(n_states):
            if pm[k] == inf:
                continue
            for b in range(n_in):
                j = next_state[k, b]
                d = r[t] - points[out_symbol[k, b]]
                m = pm[k] + d * d
                if m < new[j]:
                    new[j] = m
                    prev[t, j] = k
                    inp[t, j] = b
        pm = new

    k = 0
    for s in range(n_states):
        if pm[s] < pm[k]:
            k = s

    bits = empty(n, dtype=int8)
    for t in range(n - 1, -1, -1):
        bits[t] = inp[t, k]
        k = prev[t, k]
    return bits


def viterbi_decode(cc_trellis, r, n_info=None):
    """
    Maximum-likelihood path of a terminated convolutional code under squared Euclidean
    metrics, starting from the all-zero state.

    Parameters
    ----------
    cc_trellis : skccm.baseline.CodeTrellis
        Code trellis with `next_state`, `output_symbol`, the nominal symbol `points`, and
        the number of tail bits `n_tail`.
    r : array-like
        One received soft symbol per trellis stage (information plus tail).
    n_info : {None, int}, optional
        Expected number of information bits, checked against the length of `r`.

    Returns
    -------
    bits : numpy.ndarray
        Decoded information bits (tail removed). Ties between paths are broken towards
        the smallest predecessor state index.
    """
    r = asarray(r, dtype=float64)
    n_tail = cc_trellis.n_tail
    if n_info is None:
        n_info = r.size - n_tail
    if n_info < 1 or r.size != n_info + n_tail:
        raise ValueError(
            f"Received length {r.size} does not match {n_info} information bits "
            f"plus {n_tail} tail bits."
        )

    bits = _viterbi(
        cc_trellis.next_state,
        cc_trellis.output_symbol,
        asarray(cc_trellis.points, dtype=float64),
        r,
        n_tail,
    )
    return bits[:n_info]
