"""
Gray-labeled 4-PAM mapping

skccm developers
"""
from numpy import array, asarray, sqrt, float64

from skccm.utility.internal import as_bits

__all__ = ["PamMapper", "pam_map"]


class PamMapper:
    """
    Gray-labeled 4-PAM with unit average symbol power.

    Labels map as 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3, all scaled by 1/sqrt(5).
    Label index 2 c1 + c2 for the coded pair (c1, c2).
    """

    # amplitude for label index 0 (00), 1 (01), 2 (10), 3 (11)
    _gray = (-3.0, -1.0, 3.0, 1.0)

    def __repr__(self):
        return f"PamMapper(scale={self.scale!r})"

    def __init__(self):
        self.scale = 1.0 / sqrt(5.0)
        self.points = array(self._gray, dtype=float64) * self.scale
        self.points.setflags(write=False)

    @property
    def power(self):
        return float((self.points**2).mean())


def pam_map(mapper, coded):
    """
    Map consecutive coded bit pairs to 4-PAM symbols.

    Parameters
    ----------
    mapper : PamMapper
    coded : array-like
        Coded bits, even length.

    Returns
    -------
    symbols : numpy.ndarray
        One symbol per coded pair.
    """
    coded = as_bits(coded, "coded")
    if coded.size % 2:
        raise ValueError("Coded bit sequence must have an even length.")

    labels = 2 * coded[0::2].astype(int) + coded[1::2]
    return asarray(mapper.points)[labels]
