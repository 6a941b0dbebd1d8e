"""
Conjugation functions reshaping the density of the chaotic samples

skccm developers
"""
from pathlib import Path

from numpy import (
    asarray,
    arange,
    interp,
    diff,
    zeros,
    float64,
    floor,
    minimum,
    isfinite,
)

__all__ = [
    "ConjugationError",
    "ConjugationFunction",
    "eval_h",
    "interpolation_matrix",
    "read_conjugation",
    "write_conjugation",
]


class ConjugationError(ValueError):
    pass


class ConjugationFunction:
    """
    Strictly increasing map of [0, 1] onto itself, sampled at z^i = i/M and evaluated
    by linear interpolation.

    Parameters
    ----------
    samples : array-like
        M + 1 samples s^0, ..., s^M. Must satisfy s^0 = 0, s^M = 1 and be strictly
        increasing.

    Raises
    ------
    ConjugationError
        If the samples violate the constraints. The message names the first offending
        index.
    """

    __slots__ = ("_samples",)

    def __str__(self):
        return "ConjugationFunction"

    def __repr__(self):
        return f"ConjugationFunction(m={self.m})"

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self.m == other.m and (self._samples == other._samples).all()
        return False

    def __init__(self, samples):
        s = asarray(samples, dtype=float64).copy()
        self._validate(s)
        s.setflags(write=False)
        self._samples = s

    @staticmethod
    def _validate(s):
        if s.ndim != 1 or s.size < 3:
            raise ConjugationError("Need at least 3 samples (M >= 2) in a 1D sequence.")
        bad = ~isfinite(s)
        if bad.any():
            raise ConjugationError(f"Sample {bad.argmax()} is not finite.")
        if s[0] != 0.0:
            raise ConjugationError(f"Sample 0 must be 0, got {s[0]!r}.")
        if s[-1] != 1.0:
            raise ConjugationError(f"Sample {s.size - 1} must be 1, got {s[-1]!r}.")

        steps = diff(s)
        if (steps <= 0).any():
            i = int((steps <= 0).argmax()) + 1
            raise ConjugationError(
                f"Samples must be strictly increasing: sample {i} ({s[i]!r}) <= "
                f"sample {i - 1} ({s[i - 1]!r})."
            )

    @classmethod
    def identity(cls, m):
        """
        The identity conjugation h(z) = z with `m` segments.
        """
        s = arange(m + 1, dtype=float64) / m
        s[-1] = 1.0
        return cls(s)

    @classmethod
    def from_increments(cls, increments):
        """
        Build the samples as the cumulative sum of strictly positive increments that sum
        to one, s^i = sum_{j < i} delta_j.
        """
        inc = asarray(increments, dtype=float64)
        s = zeros(inc.size + 1, dtype=float64)
        s[1:] = inc.cumsum()
        s[1:] /= s[-1]
        s[-1] = 1.0
        return cls(s)

    @property
    def m(self):
        return self._samples.size - 1

    @property
    def samples(self):
        return self._samples

    @property
    def knots(self):
        return arange(self.m + 1, dtype=float64) / self.m

    def __call__(self, z):
        return eval_h(self, z)

    def levels(self, q):
        """
        Zero-mean output levels x(k) = 2 h(k 2**-q) - 1 for every grid state k.
        """
        z = arange(1 << q, dtype=float64) / (1 << q)
        return 2.0 * interp(z, self.knots, self._samples) - 1.0


def eval_h(conj, z):
    """
    Evaluate a conjugation function by linear interpolation between its samples.

    Parameters
    ----------
    conj : ConjugationFunction
        Conjugation function.
    z : {float, array-like}
        Point(s) in [0, 1].

    Returns
    -------
    s : {float, numpy.ndarray}
        h(z), exact at the knots z^i = i/M.

    Raises
    ------
    ValueError
        If any `z` is outside [0, 1].
    """
    za = asarray(z, dtype=float64)
    if (za < 0.0).any() or (za > 1.0).any():
        raise ValueError("`z` must be in [0, 1].")

    res = interp(za, conj.knots, conj.samples)
    return float(res) if res.ndim == 0 else res


def interpolation_matrix(m, q):
    """
    Linear map W from the M + 1 samples to h evaluated on the 2**q grid, so that
    h(k 2**-q) = (W @ s)[k].

    Parameters
    ----------
    m : int
        Number of segments M.
    q : int
        Quantization bits.

    Returns
    -------
    w : numpy.ndarray
        (2**q, M + 1) interpolation weights.
    """
    n = 1 << q
    pos = arange(n, dtype=float64) / n * m
    lo = minimum(floor(pos).astype(int), m - 1)
    frac = pos - lo

    w = zeros((n, m + 1), dtype=float64)
    w[arange(n), lo] = 1.0 - frac
    w[arange(n), lo + 1] += frac
    return w


def write_conjugation(conj, file):
    """
    Write a conjugation function in the text format: the integer M on the first line,
    then the samples s^0, ..., s^M one per line with 17 significant digits.

    Parameters
    ----------
    conj : ConjugationFunction
    file : {str, path-like}
    """
    lines = [f"{conj.m}\n"] + [f"{s:.17g}\n" for s in conj.samples]
    with open(file, "w") as f:
        f.writelines(lines)
    return str(file)


def read_conjugation(file):
    """
    Read a conjugation function written by :func:`write_conjugation`.

    Raises
    ------
    ConjugationError
        If the file cannot be read, is malformed, or the samples violate the
        constraints.
    """
    try:
        raw = Path(file).read_text()
    except OSError as e:
        raise ConjugationError(f"Cannot read conjugation file ({file}): {e}")
    text = [ln.strip() for ln in raw.splitlines()]
    text = [ln for ln in text if ln and not ln.startswith("#")]
    if not text:
        raise ConjugationError(f"Conjugation file ({file}) is empty.")

    try:
        m = int(text[0])
    except ValueError:
        raise ConjugationError(f"First line of ({file}) must be the integer M.")

    if len(text) - 1 != m + 1:
        raise ConjugationError(
            f"Expected {m + 1} samples in ({file}), found {len(text) - 1}."
        )

    samples = []
    for i, ln in enumerate(text[1:]):
        try:
            samples.append(float(ln))
        except ValueError:
            raise ConjugationError(f"Sample {i} ({ln!r}) is not a number.")

    return ConjugationFunction(samples)
