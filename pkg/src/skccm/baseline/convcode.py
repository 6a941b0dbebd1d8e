"""
Rate 1/2 feed-forward convolutional code

skccm developers
"""
from dataclasses import dataclass

from numpy import (
    array,
    concatenate,
    convolve,
    empty,
    int64,
    int8,
    zeros,
    ndarray,
)

from skccm.utility.internal import as_bits

__all__ = ["ConvCode", "CodeTrellis", "cc_encode", "impulse_response"]


def _parity(v):
    return bin(int(v)).count("1") & 1


class ConvCode:
    """
    Non-systematic, non-recursive rate 1/2 convolutional code.

    Parameters
    ----------
    generators : tuple of int, optional
        Generator polynomials, octal notation as Python ints, most significant bit on
        the current input. Default is (0o133, 0o171).
    constraint_length : int, optional
        Constraint length K. Default is 7 (64 states).
    """

    def __repr__(self):
        gens = ", ".join(f"{g:o}" for g in self.generators)
        return f"ConvCode(generators=({gens}), constraint_length={self.constraint_length})"

    def __init__(self, generators=(0o133, 0o171), constraint_length=7):
        self.generators = tuple(int(g) for g in generators)
        self.constraint_length = int(constraint_length)
        if len(self.generators) != 2:
            raise ValueError("Only rate 1/2 codes (2 generators) are supported.")
        if any(g >= (1 << self.constraint_length) for g in self.generators):
            raise ValueError("Generator has more taps than the constraint length.")

    @property
    def memory(self):
        return self.constraint_length - 1

    @property
    def n_states(self):
        return 1 << self.memory

    @property
    def taps(self):
        """
        (2, K) binary taps, first column on the current input, eg 133 -> 1011011.
        """
        k = self.constraint_length
        return array(
            [[(g >> (k - 1 - i)) & 1 for i in range(k)] for g in self.generators],
            dtype=int64,
        )

    def trellis(self, points):
        """
        Code trellis with the symbol label of each branch.

        The state holds the previous K - 1 inputs, most recent in the most significant
        bit. A branch emits the label 2 c1 + c2 of its coded pair (c1, c2).

        Parameters
        ----------
        points : array-like
            Nominal symbol for each of the 4 labels.

        Returns
        -------
        trellis : CodeTrellis
        """
        m = self.memory
        nxt = empty((self.n_states, 2), dtype=int64)
        out = empty((self.n_states, 2), dtype=int64)
        for k in range(self.n_states):
            for b in (0, 1):
                reg = (b << m) | k
                nxt[k, b] = reg >> 1
                c1, c2 = (_parity(reg & g) for g in self.generators)
                out[k, b] = 2 * c1 + c2
        return CodeTrellis(
            next_state=nxt, output_symbol=out, points=array(points, dtype=float), n_tail=m
        )


@dataclass(frozen=True)
class CodeTrellis:
    next_state: ndarray
    output_symbol: ndarray
    points: ndarray
    n_tail: int


def cc_encode(code, bits):
    """
    Encode and terminate a block of bits.

    Parameters
    ----------
    code : ConvCode
    bits : array-like
        Information bits, nonempty. K - 1 zero tail bits are appended.

    Returns
    -------
    coded : numpy.ndarray
        Interleaved coded bits c1_0, c2_0, c1_1, c2_1, ..., of length
        2 (len(bits) + K - 1).
    """
    bits = as_bits(bits)
    if bits.size == 0:
        raise ValueError("`bits` must not be empty.")

    u = concatenate((bits, zeros(code.memory, dtype=int8))).astype(int64)
    coded = empty(2 * u.size, dtype=int8)
    for i, taps in enumerate(code.taps):
        coded[i::2] = convolve(u, taps)[: u.size] % 2
    return coded


def impulse_response(code):
    """
    Coded output of a single 1 followed by zeros: the generator taps, interleaved.
    """
    impulse = zeros(code.constraint_length, dtype=int8)
    impulse[0] = 1
    return cc_encode(code, impulse)[: 2 * code.constraint_length]

