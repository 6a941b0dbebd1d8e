"""
Internal utility functions that don't necessarily need to be exposed in the public API

skccm developers
"""
from math import exp, log1p, inf

from numba import njit
from numpy import asarray, int8, log10
from numpy.random import SeedSequence, default_rng

__all__ = ["db_to_linear", "linear_to_db", "keyed_rng", "as_bits"]


def db_to_linear(value_db):
    """
    Convert a power ratio in decibels to a linear ratio.

    Parameters
    ----------
    value_db : {float, numpy.ndarray}
        Value(s) in dB.

    Returns
    -------
    value : {float, numpy.ndarray}
        Linear power ratio(s).
    """
    return 10.0 ** (asarray(value_db, dtype=float) / 10.0)


def linear_to_db(value):
    """
    Convert a linear power ratio to decibels.

    Parameters
    ----------
    value : {float, numpy.ndarray}
        Positive linear power ratio(s).

    Returns
    -------
    value_db : {float, numpy.ndarray}
        Value(s) in dB.
    """
    return 10.0 * log10(value)


def keyed_rng(seed, *key):
    """
    Get a random generator for one independent stream of a seeded experiment.

    The stream is a deterministic function of `seed` and `key` only, so blocks that are
    simulated in different processes, or in a different order, draw the same numbers.

    Parameters
    ----------
    seed : int
        Master seed (64-bit non-negative integer).
    key : int
        Stream key, eg (Eb/N0 index, block index, stream role).

    Returns
    -------
    rng : numpy.random.Generator
        Generator seeded from `SeedSequence(seed, spawn_key=key)`.
    """
    return default_rng(SeedSequence(int(seed), spawn_key=tuple(int(k) for k in key)))


def as_bits(bits, name="bits"):
    """
    Validate and cast a binary sequence to an int8 array.

    Raises
    ------
    ValueError
        If any entry is not 0 or 1.
    """
    arr = asarray(bits)
    if arr.ndim != 1:
        raise ValueError(f"`{name}` must be a 1D sequence.")
    if arr.size > 0 and not ((arr == 0) | (arr == 1)).all():
        raise ValueError(f"`{name}` must only contain 0 and 1.")
    return arr.astype(int8)


@njit(cache=True)
def log_add(a, b):  # pragma: no cover
    """
    Max-shifted log(exp(a) + exp(b)), safe for -inf inputs.
    """
    if a == -inf:
        return b
    if b == -inf:
        return a
    if a > b:
        return a + log1p(exp(b - a))
    return b + log1p(exp(a - b))
