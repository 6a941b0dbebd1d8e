"""
Chaos-coded modulation encoder as an exact finite-state machine

skccm developers
"""
from dataclasses import dataclass
import logging

from numba import njit
from numpy import (
    arange,
    zeros,
    empty,
    full,
    concatenate,
    int64,
    int8,
    float64,
    abs as np_abs,
    ndarray,
)

from skccm.encoder.maps import MapKind, get_map_step
from skccm.encoder.conjugation import ConjugationFunction
from skccm.utility.internal import as_bits

__all__ = [
    "ConvergenceError",
    "CcmEncoder",
    "Trellis",
    "SymbolSequence",
    "StationaryStats",
    "encode_step",
    "encode_block",
    "build_trellis",
    "stationary_distribution",
    "terminate_block",
]


class ConvergenceError(RuntimeError):
    pass


class CcmEncoder:
    """
    Chaos-based coded modulation encoder.

    The state is the grid index k in [0, 2**q), representing z = k 2**-q. Each input bit
    moves the state with z_n = f(z_{n-1}, b_n) + b_n 2**-q, and the transmitted sample is
    x_n = 2 h(z_n) - 1.

    Parameters
    ----------
    q : int
        Quantization bits Q. The trellis has 2**q states.
    map : {MapKind, str, callable}, optional
        Chaotic map. Default is the Bernoulli shift map. A callable with the signature
        `step(state, bit, q)` replaces the built-in maps.
    conj : {None, ConjugationFunction}, optional
        Conjugation function. Default (None) is the identity sampled on the state grid.
    """

    def __repr__(self):
        name = self.map.value if isinstance(self.map, MapKind) else self.map.__name__
        return f"CcmEncoder(q={self.q}, map={name}, conj={self.conj!r})"

    def __init__(self, q, map=MapKind.BSM, conj=None):
        if int(q) < 1:
            raise ValueError("`q` must be a positive integer.")
        self.q = int(q)
        self.map = map if callable(map) and not isinstance(map, MapKind) else MapKind.parse(map)
        self._step = get_map_step(self.map)

        if conj is None:
            conj = ConjugationFunction.identity(self.n_states)
        if not isinstance(conj, ConjugationFunction):
            conj = ConjugationFunction(conj)
        self.conj = conj

        self._trellis = None

    @property
    def n_states(self):
        return 1 << self.q

    @property
    def trellis(self):
        if self._trellis is None:
            self._trellis = build_trellis(self)
        return self._trellis

    @property
    def levels(self):
        """Output sample x(k) attached to each grid state."""
        return self.conj.levels(self.q)

    def with_conjugation(self, conj):
        """
        Copy of the encoder with another conjugation function. The trellis is shared.
        """
        enc = CcmEncoder(self.q, self.map, conj)
        enc._trellis = self._trellis
        return enc


@dataclass(frozen=True)
class Trellis:
    """
    Trellis tables of an encoder.

    Attributes
    ----------
    next_state : numpy.ndarray
        (n_states, 2) successor grid state for each (state, bit).
    output_state : numpy.ndarray
        (n_states, 2) grid state whose conjugated value is the branch output. Here it
        is the successor itself.
    """

    next_state: ndarray
    output_state: ndarray

    @property
    def n_states(self):
        return self.next_state.shape[0]


@dataclass(frozen=True)
class SymbolSequence:
    z: ndarray
    s: ndarray
    x: ndarray

    def __len__(self):
        return self.z.size


@dataclass(frozen=True)
class StationaryStats:
    """
    Stationary law of the encoder state under equiprobable input bits.

    Attributes
    ----------
    dist : numpy.ndarray
        Stationary probability of each grid state.
    p : float
        Signal power P = E[x_n**2] for the encoder's conjugation function.
    """

    dist: ndarray
    p: float

    def power(self, levels):
        """Signal power for another set of per-state output levels."""
        return float(self.dist @ (levels * levels))


def encode_step(encoder, state, bit):
    """
    Advance the encoder by one input bit.

    Parameters
    ----------
    encoder : CcmEncoder
    state : int
        Grid state in [0, 2**q).
    bit : int
        Input bit, 0 or 1.

    Returns
    -------
    next_state : int
        Grid index of f(z, b) + b 2**-q, computed in integer arithmetic.
    """
    if not 0 <= int(state) < encoder.n_states:
        raise ValueError(f"`state` must be in [0, {encoder.n_states}).")
    if int(bit) not in (0, 1):
        raise ValueError("`bit` must be 0 or 1.")
    return int(encoder._step(int(state), int(bit), encoder.q))


def build_trellis(encoder):
    """
    Build the next-state and output-state tables of the encoder.

    Parameters
    ----------
    encoder : CcmEncoder

    Returns
    -------
    trellis : Trellis
        Tables indexed [state, bit]. They do not depend on the conjugation function.
    """
    states = arange(encoder.n_states, dtype=int64)
    nxt = empty((encoder.n_states, 2), dtype=int64)
    for b in (0, 1):
        nxt[:, b] = encoder._step(states, full(states.size, b, dtype=int64), encoder.q)

    if (nxt < 0).any() or (nxt >= encoder.n_states).any():
        raise ValueError("Map produced states outside of the grid.")

    nxt.setflags(write=False)
    return Trellis(next_state=nxt, output_state=nxt)


@njit(cache=True)
def _walk(next_state, bits, start):  # pragma: no cover
    z = empty(bits.size, dtype=int64)
    k = start
    for i in range(bits.size):
        k = next_state[k, bits[i]]
        z[i] = k
    return z


def encode_block(encoder, bits, initial_state=0):
    """
    Encode a block of bits.

    Parameters
    ----------
    encoder : CcmEncoder
    bits : array-like
        Input bits, nonempty.
    initial_state : int, optional
        Encoder state before the first bit. Default is 0.

    Returns
    -------
    seq : SymbolSequence
        Grid states z_n, conjugated samples s_n = h(z_n 2**-q), and transmitted samples
        x_n = 2 s_n - 1, all the same length as `bits`.
    """
    bits = as_bits(bits)
    if bits.size == 0:
        raise ValueError("`bits` must not be empty.")
    if not 0 <= int(initial_state) < encoder.n_states:
        raise ValueError(f"`initial_state` must be in [0, {encoder.n_states}).")

    z = _walk(encoder.trellis.next_state, bits.astype(int64), int64(initial_state))
    x = encoder.levels[z]
    return SymbolSequence(z=z, s=(x + 1.0) / 2.0, x=x)


def terminate_block(encoder, bits):
    """
    Append Q zero tail bits to a block of information bits.
    """
    bits = as_bits(bits)
    if bits.size == 0:
        raise ValueError("`bits` must not be empty.")
    return concatenate((bits, zeros(encoder.q, dtype=int8)))


def stationary_distribution(encoder, tol=1e-12, max_iter=100_000):
    """
    Stationary distribution of the encoder state chain under equiprobable input bits,
    and the signal power it induces.

    Parameters
    ----------
    encoder : CcmEncoder
    tol : float, optional
        L1 residual at which the power iteration stops. Default is 1e-12.
    max_iter : int, optional
        Iteration cap. Default is 100000.

    Returns
    -------
    stats : StationaryStats

    Raises
    ------
    ConvergenceError
        If the residual is still above `tol` after `max_iter` iterations.
    """
    n = encoder.n_states
    nxt = encoder.trellis.next_state

    # lazy chain (I + P) / 2: same fixed point, and never periodic
    trans = zeros((n, n), dtype=float64)
    trans[arange(n), arange(n)] += 0.5
    for b in (0, 1):
        for k in range(n):
            trans[k, nxt[k, b]] += 0.25

    dist = full(n, 1.0 / n)
    for i in range(max_iter):
        new = dist @ trans
        new /= new.sum()
        resid = np_abs(new - dist).sum()
        dist = new
        if resid < tol:
            break
    else:
        raise ConvergenceError(
            f"State chain did not converge in {max_iter} iterations (residual {resid:.3g})."
        )

    logging.getLogger(__name__).debug(f"Stationary distribution converged after {i + 1} iterations")
    levels = encoder.levels
    return StationaryStats(dist=dist, p=float(dist @ (levels * levels)))
