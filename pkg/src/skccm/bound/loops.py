"""
Error loop enumeration on the encoder trellis

skccm developers
"""
from dataclasses import dataclass
import logging

from numpy import (
    arange,
    array,
    asarray,
    concatenate,
    empty,
    zeros,
    int8,
    int32,
    int64,
    ndarray,
)

__all__ = ["ErrorLoop", "enumerate_loops", "clear_loop_cache"]

logger = logging.getLogger(__name__)

_LOOP_CACHE = {}


@dataclass(frozen=True, eq=False)
class ErrorLoop:
    """
    An input error pattern together with every trellis instance on which it forms a
    simple loop.

    A (start state, data) instance is valid when the path driven by `data` and the path
    driven by `data ^ e` differ after each of the L inputs, and merge after one further
    common input, whatever its value.

    Attributes
    ----------
    e : numpy.ndarray
        Input error pattern, e[0] = 1.
    starts : numpy.ndarray
        (n,) start state of each instance.
    data : numpy.ndarray
        (n, L) data bits of each instance.
    paths : numpy.ndarray
        (n, L) states after each input along the data path.
    alt_paths : numpy.ndarray
        (n, L) states after each input along the erroneous path.
    """

    e: ndarray
    starts: ndarray
    data: ndarray
    paths: ndarray
    alt_paths: ndarray

    def __repr__(self):
        e = "".join(str(int(v)) for v in self.e)
        return f"ErrorLoop(e={e}, length={self.length}, weight={self.weight}, n_instances={self.n_instances})"

    @property
    def length(self):
        return int(self.e.size)

    @property
    def weight(self):
        return int(self.e.sum())

    @property
    def n_instances(self):
        return int(self.starts.size)

    @property
    def instances(self):
        """List of (start state, data bits) pairs."""
        return [
            (int(s), tuple(int(b) for b in d)) for s, d in zip(self.starts, self.data)
        ]


def clear_loop_cache():
    _LOOP_CACHE.clear()


def _advance(nxt, z, zp, starts, data, depth, e_bit):
    # every live instance branches on the next data bit
    zz = concatenate((nxt[z, 0], nxt[z, 1]))
    zzp = concatenate((nxt[zp, e_bit], nxt[zp, 1 - e_bit]))
    ss = concatenate((starts, starts))
    dd = concatenate((data, data | (1 << depth)))

    alive = zz != zzp
    return zz[alive], zzp[alive], ss[alive], dd[alive]


def _make_loop(nxt, prefix, starts, data):
    n_len = len(prefix)
    e = array(prefix, dtype=int8)
    bits = ((data[:, None] >> arange(n_len)) & 1).astype(int8)

    paths = empty((starts.size, n_len), dtype=int32)
    alt = empty((starts.size, n_len), dtype=int32)
    z = starts.copy()
    zp = starts.copy()
    for i in range(n_len):
        z = nxt[z, bits[:, i]]
        zp = nxt[zp, bits[:, i] ^ e[i]]
        paths[:, i] = z
        alt[:, i] = zp

    for a in (e, bits, paths, alt, starts):
        a.setflags(write=False)
    return ErrorLoop(e=e, starts=starts, data=bits, paths=paths, alt_paths=alt)


def _search(nxt, prefix, z, zp, starts, data, l_min, l_max, found):
    depth = len(prefix)
    if depth >= l_min:
        merged = (nxt[z, 0] == nxt[zp, 0]) & (nxt[z, 1] == nxt[zp, 1])
        if merged.any():
            found.append(_make_loop(nxt, prefix, starts[merged], data[merged]))
    if depth == l_max:
        return

    for e_bit in (0, 1):
        state = _advance(nxt, z, zp, starts, data, depth, e_bit)
        if state[0].size > 0:
            _search(nxt, prefix + (e_bit,), *state, l_min, l_max, found)


def enumerate_loops(trellis, q, l_min=None, l_max=None):
    """
    Enumerate the error loops of an encoder trellis by a depth-first search over error
    patterns, pruning every pattern prefix on which all path pairs have merged.

    Parameters
    ----------
    trellis : skccm.encoder.Trellis
        Encoder trellis.
    q : int
        Quantization bits Q.
    l_min : {None, int}, optional
        Shortest loop length. Default is Q.
    l_max : {None, int}, optional
        Longest loop length. Default is 2Q.

    Returns
    -------
    loops : list of ErrorLoop
        Loops sorted by length, then by pattern. Empty if no loop of the requested
        lengths exists. Results are cached per trellis and length range.
    """
    l_min = q if l_min is None else int(l_min)
    l_max = 2 * q if l_max is None else int(l_max)
    if l_min < 1 or l_max < l_min:
        raise ValueError("Loop lengths must satisfy 1 <= l_min <= l_max.")

    nxt = asarray(trellis.next_state, dtype=int64)
    if nxt.shape[0] != 1 << q:
        raise ValueError(f"Trellis has {nxt.shape[0]} states, expected {1 << q}.")

    key = (nxt.tobytes(), q, l_min, l_max)
    if key in _LOOP_CACHE:
        return list(_LOOP_CACHE[key])

    starts = arange(1 << q, dtype=int64)
    state = _advance(nxt, starts, starts, starts, zeros(starts.size, dtype=int64), 0, 1)

    found = []
    if state[0].size > 0:
        _search(nxt, (1,), *state, l_min, l_max, found)
    found.sort(key=lambda lp: (lp.length, tuple(lp.e)))

    logger.info(
        f"Found {len(found)} error loops with {sum(lp.n_instances for lp in found)} "
        f"instances for lengths [{l_min}, {l_max}]"
    )
    _LOOP_CACHE[key] = found
    return list(found)
