"""
Union bound on the bit error rate of the mismatched trellis decoder

skccm developers
"""
from dataclasses import dataclass

from numpy import (
    asarray,
    bincount,
    concatenate,
    exp,
    float64,
    int64,
    ndarray,
    ones,
    pi,
    repeat,
    sqrt,
    unique,
    zeros,
    arange,
)
from scipy.sparse import csr_matrix
from scipy.special import erfc

from skccm.encoder.core import StationaryStats
from skccm.channel.amplifier import compute_norm
from skccm.utility.internal import db_to_linear

__all__ = ["BoundResult", "StagedBound", "d_eq", "pep", "union_bound"]


@dataclass(frozen=True)
class BoundResult:
    """
    Attributes
    ----------
    value : float
        Union bound on the bit error probability.
    per_loop : numpy.ndarray
        Contribution of each error loop, in loop order. Sums to `value`.
    ebn0_db : float
    """

    value: float
    per_loop: ndarray
    ebn0_db: float


def d_eq(y, x, x_alt):
    """
    Equivalent distance between a transmitted and a competing sequence seen by a decoder
    that measures distances to the nominal (undistorted) samples.

    Parameters
    ----------
    y : array-like
        Received noiseless samples, A g(x).
    x : array-like
        Transmitted nominal samples.
    x_alt : array-like
        Competing nominal samples.

    Returns
    -------
    d : float
        (sum (y - x_alt)**2 - sum (y - x)**2) / sqrt(sum (x - x_alt)**2). Negative when
        the distortion moves y closer to the competing sequence.
    """
    y, x, x_alt = (asarray(v, dtype=float64) for v in (y, x, x_alt))
    if not y.shape == x.shape == x_alt.shape or y.ndim != 1 or y.size < 1:
        raise ValueError("`y`, `x` and `x_alt` must be 1D and of equal nonzero length.")

    den = ((x - x_alt) ** 2).sum()
    if den <= 0.0:
        raise ValueError("Candidate sequences are identical.")
    return float((((y - x_alt) ** 2).sum() - ((y - x) ** 2).sum()) / sqrt(den))


def pep(d, p_power, ebn0_db):
    """
    Pairwise error probability for an equivalent distance.

    Parameters
    ----------
    d : {float, numpy.ndarray}
        Equivalent distance(s), any sign.
    p_power : float
        Signal power P.
    ebn0_db : float
        Eb/N0 in dB.

    Returns
    -------
    prob : {float, numpy.ndarray}
        1/2 erfc(d / (2 sqrt(P)) sqrt(Eb/N0)), above 1/2 for negative `d`.
    """
    if not p_power > 0:
        raise ValueError("`p_power` must be positive.")
    arg = asarray(d, dtype=float64) * sqrt(db_to_linear(ebn0_db)) / (2.0 * sqrt(p_power))
    res = 0.5 * erfc(arg)
    return float(res) if res.ndim == 0 else res


class StagedBound:
    """
    Union bound compiled for repeated evaluation with different output levels.

    Every loop instance is reduced to the multiset of (transmitted, competing) state
    pairs it visits, and stored as a row of a sparse count matrix C over the N**2
    state pairs. Identical rows of a loop are merged and their weights added. An
    evaluation then builds the N x N tables

        F[a, b] = (y_a - x_b)**2 - (y_a - x_a)**2,    G[a, b] = (x_a - x_b)**2

    and gets every numerator and squared denominator of the equivalent distances from
    the products C F and C G.

    Parameters
    ----------
    loops : list of skccm.bound.ErrorLoop
        Loops of the encoder trellis.
    dist : numpy.ndarray
        Stationary state distribution, used for the power P and the amplifier
        normalization.
    """

    def __repr__(self):
        return f"StagedBound(n_loops={self.n_loops}, n_rows={self.n_rows})"

    def __init__(self, loops, dist):
        self.dist = asarray(dist, dtype=float64)
        n = self.dist.size
        self.n_states = n
        self.n_loops = len(loops)

        cols, weights, loop_of_row, lengths = [], [], [], []
        for i, loop in enumerate(loops):
            pairs = loop.paths.astype(int64) * n + loop.alt_paths
            pairs.sort(axis=1)
            rows, counts = unique(pairs, axis=0, return_counts=True)

            cols.append(rows.ravel())
            weights.append(counts * loop.weight / 2.0 ** (n.bit_length() - 1 + loop.length))
            loop_of_row.append(zeros(rows.shape[0], dtype=int64) + i)
            lengths.append(repeat(loop.length, rows.shape[0]))

        if loops:
            cols = concatenate(cols)
            lengths = concatenate(lengths)
            self._weights = concatenate(weights)
            self._loop_of_row = concatenate(loop_of_row)
        else:
            cols = zeros(0, dtype=int64)
            lengths = zeros(0, dtype=int64)
            self._weights = zeros(0, dtype=float64)
            self._loop_of_row = zeros(0, dtype=int64)

        self.n_rows = self._weights.size
        row_ids = repeat(arange(self.n_rows), lengths)
        # duplicate pairs within a row are summed into counts
        self._c = csr_matrix(
            (ones(cols.size), (row_ids, cols)), shape=(self.n_rows, n * n)
        )

    def _tables(self, levels, hpa):
        x = asarray(levels, dtype=float64)
        if x.shape != self.dist.shape:
            raise ValueError("`levels` must have one entry per trellis state.")

        stats = StationaryStats(dist=self.dist, p=float(self.dist @ (x * x)))
        a_norm = compute_norm(hpa, stats, x)
        y = a_norm * hpa.gain(x)

        f = (y[:, None] - x[None, :]) ** 2 - ((y - x) ** 2)[:, None]
        g = (x[:, None] - x[None, :]) ** 2
        return stats.p, a_norm, y, f, g

    def _terms(self, levels, hpa):
        p, a_norm, y, f, g = self._tables(levels, hpa)
        num = self._c @ f.ravel()
        den = self._c @ g.ravel()
        return p, a_norm, y, num, den

    def distances(self, levels, hpa):
        """
        Equivalent distance of every merged instance row.

        Returns
        -------
        d : numpy.ndarray
            One distance per row, rows grouped by loop.
        loop_id : numpy.ndarray
            Loop index of each row.
        """
        _, _, _, num, den = self._terms(levels, hpa)
        return num / sqrt(den), self._loop_of_row

    def contributions(self, levels, hpa, ebn0_db):
        """
        Bound contribution of each loop.
        """
        if self.n_rows == 0:
            return zeros(self.n_loops, dtype=float64)
        p, _, _, num, den = self._terms(levels, hpa)
        terms = self._weights * pep(num / sqrt(den), p, ebn0_db)
        return bincount(self._loop_of_row, weights=terms, minlength=self.n_loops)

    def value(self, levels, hpa, ebn0_db):
        return float(self.contributions(levels, hpa, ebn0_db).sum())

    def gradient(self, levels, hpa, ebn0_db, step=None):
        """
        Gradient of the bound with respect to the output level of every state.

        The levels enter the bound directly, through the amplified samples, through the
        power P and through the amplifier normalization A; all four paths are included.

        Parameters
        ----------
        levels : numpy.ndarray
            Output level x(k) of each state.
        hpa : skccm.channel.HpaModel
            Amplifier. Its normalization is recomputed for `levels`.
        ebn0_db : float
        step : {None, float}, optional
            If given, use central differences with this step on each level. Default
            (None) is the exact adjoint gradient.

        Returns
        -------
        grad : numpy.ndarray
        """
        x = asarray(levels, dtype=float64)
        if step is not None:
            return self._fd_gradient(x, hpa, ebn0_db, step)
        if self.n_rows == 0:
            return zeros(x.size, dtype=float64)

        n = self.n_states
        p, a_norm, y, num, den = self._terms(x, hpa)
        c = sqrt(float(db_to_linear(ebn0_db)))
        rden = 1.0 / sqrt(den)
        arg = num * rden * c / (2.0 * sqrt(p))

        # weighted erfc density, -dJ/darg
        dens = self._weights * exp(-arg * arg) / sqrt(pi)
        dj_dd = -dens * c / (2.0 * sqrt(p))
        dj_dp = float((dens * arg).sum()) / (2.0 * p)

        ct = self._c.T
        phi_f = (ct @ (dj_dd * rden)).reshape(n, n)
        phi_g = (ct @ (-0.5 * dj_dd * num * rden**3)).reshape(n, n)

        diff = x[:, None] - x[None, :]
        dj_dy = 2.0 * (phi_f * diff).sum(axis=1)

        grad = 2.0 * (y - x) * phi_f.sum(axis=1)
        grad -= 2.0 * (phi_f * (y[:, None] - x[None, :])).sum(axis=0)
        grad += 2.0 * (phi_g * diff).sum(axis=1) - 2.0 * (phi_g * diff).sum(axis=0)

        gx = hpa.gain(x)
        gs = hpa.slope(x)
        s_pow = float(self.dist @ (gx * gx))
        dj_da = float((dj_dy * gx).sum())

        grad += dj_dy * a_norm * gs
        grad += dj_da * a_norm * self.dist * (x / p - gx * gs / s_pow)
        grad += dj_dp * 2.0 * self.dist * x
        return grad

    def _fd_gradient(self, x, hpa, ebn0_db, step):
        grad = zeros(x.size, dtype=float64)
        for k in range(x.size):
            xp = x.copy()
            xm = x.copy()
            xp[k] += step
            xm[k] -= step
            grad[k] = (self.value(xp, hpa, ebn0_db) - self.value(xm, hpa, ebn0_db)) / (
                2.0 * step
            )
        return grad


def union_bound(loops, conj, hpa, stats, ebn0_db):
    """
    Union bound on the bit error probability of a chaos-coded link with a nonlinear
    amplifier and a decoder that ignores the distortion.

    Each loop instance contributes weight(e) / 2**(Q + L(e)) times the pairwise error
    probability of its equivalent distance.

    Parameters
    ----------
    loops : list of skccm.bound.ErrorLoop
        Loops from :func:`skccm.bound.enumerate_loops`.
    conj : skccm.encoder.ConjugationFunction
        Conjugation function.
    hpa : skccm.channel.HpaModel
        Amplifier. Its normalization is recomputed for `conj`.
    stats : skccm.encoder.StationaryStats
        Stationary law of the encoder states.
    ebn0_db : float
        Eb/N0 in dB.

    Returns
    -------
    result : BoundResult
    """
    q = stats.dist.size.bit_length() - 1
    staged = StagedBound(loops, stats.dist)
    per_loop = staged.contributions(conj.levels(q), hpa, ebn0_db)
    return BoundResult(value=float(per_loop.sum()), per_loop=per_loop, ebn0_db=float(ebn0_db))
