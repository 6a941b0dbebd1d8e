"""
Piecewise linear chaotic maps evaluated on the dyadic state grid

skccm developers
"""
from enum import Enum

from numpy import asarray, where, int64

__all__ = ["MapKind", "bsm_step", "mtm_step", "get_map_step"]


class MapKind(Enum):
    """
    Chaotic map driving the encoder.

    BSM : Bernoulli shift map, f(z, b) = 2z mod 1.
    MTM : tent multimap, f(z, 0) = T(z), f(z, 1) = 1 - T(z).
    """

    BSM = "bsm"
    MTM = "mtm"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(
                f"Map [{value}] not recognized. Options are {[m.value for m in cls]}."
            )


def bsm_step(state, bit, q):
    """
    Bernoulli shift map encoder step on the grid.

    Parameters
    ----------
    state : {int, numpy.ndarray}
        Grid index k in [0, 2**q), representing z = k * 2**-q.
    bit : {int, numpy.ndarray}
        Input bit(s).
    q : int
        Quantization bits.

    Returns
    -------
    next_state : {int, numpy.ndarray}
        Grid index of 2z mod 1 + b * 2**-q.
    """
    n = 1 << q
    state = asarray(state, dtype=int64)
    bit = asarray(bit, dtype=int64)
    return ((2 * state) % n + bit) % n


def mtm_step(state, bit, q):
    """
    Tent multimap encoder step on the grid.

    The bit selects the branch, f(z, 0) = T(z) and f(z, 1) = 1 - T(z), with
    T(z) = 2z for z < 1/2 and 2(1 - z) otherwise. The perturbed value
    f(z, b) + b * 2**-q is reduced modulo 1, so an f value of exactly 1 is the
    same grid point as 0.

    Parameters
    ----------
    state : {int, numpy.ndarray}
        Grid index k in [0, 2**q).
    bit : {int, numpy.ndarray}
        Input bit(s).
    q : int
        Quantization bits.

    Returns
    -------
    next_state : {int, numpy.ndarray}
        Grid index of the successor.
    """
    n = 1 << q
    state = asarray(state, dtype=int64)
    bit = asarray(bit, dtype=int64)

    tent = where(2 * state < n, 2 * state, 2 * (n - state))
    branch = where(bit == 0, tent, n - tent)
    return (branch + bit) % n


_map_steps = {
    MapKind.BSM: bsm_step,
    MapKind.MTM: mtm_step,
}


def get_map_step(kind):
    """
    Get the grid step function for a map.

    Parameters
    ----------
    kind : {MapKind, str, callable}
        Map identifier, or a custom step function with the signature
        `step(state, bit, q) -> next_state`.

    Returns
    -------
    step : callable
    """
    if callable(kind) and not isinstance(kind, MapKind):
        return kind
    return _map_steps[MapKind.parse(kind)]
