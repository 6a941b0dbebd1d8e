"""
Memoryless high-power amplifier models with input back-off

skccm developers
"""
from numpy import asarray, ones_like, sqrt, float64
from warnings import warn

__all__ = [
    "NormalizationError",
    "HpaModel",
    "IdealAmplifier",
    "saleh_am_am",
    "ibo_to_scale",
    "compute_norm",
]

_BACKOFF_REFERENCES = ("peak", "average")


class NormalizationError(ValueError):
    pass


def ibo_to_scale(alpha, beta, ibo_db, reference="peak", power=None):
    """
    Compute the input scaling B for an input back-off.

    Parameters
    ----------
    alpha : float
        Saleh numerator gain. Does not change the saturation point, kept for signature
        symmetry with the model parameters.
    beta : float
        Saleh compression (1 / amplitude**2). The input saturation amplitude is
        1 / sqrt(beta).
    ibo_db : float
        Input back-off in dB.
    reference : {"peak", "average"}, optional
        Back-off measured from the peak input amplitude (1, by construction of the
        zero-mean samples), or from the RMS amplitude sqrt(power). Default is "peak".
    power : {None, float}, optional
        Average input power, required for `reference="average"`.

    Returns
    -------
    b_scale : float
        B = 10**(-ibo_db / 20) / sqrt(beta) for the peak reference, divided by
        sqrt(power) for the average reference.
    """
    if alpha <= 0 or beta <= 0:
        raise ValueError("`alpha` and `beta` must be positive.")
    if reference not in _BACKOFF_REFERENCES:
        raise ValueError(f"`reference` must be one of {_BACKOFF_REFERENCES}.")

    b = 10.0 ** (-ibo_db / 20.0) / sqrt(beta)
    if reference == "average":
        if power is None or power <= 0:
            raise ValueError("Average-referenced back-off needs a positive `power`.")
        b /= sqrt(power)
    return float(b)


class HpaModel:
    """
    Saleh AM/AM amplifier with input back-off.

    Parameters
    ----------
    alpha : float, optional
        Numerator gain. Default is 2.1587.
    beta : float, optional
        Compression coefficient. Default is 1.1517.
    ibo_db : float, optional
        Input back-off in dB. Default is 40.0 (near-linear regime).
    backoff_reference : {"peak", "average"}, optional
        See :func:`ibo_to_scale`. Default is "peak".
    power : {None, float}, optional
        Average input power, only used with the average reference.
    a_norm : float, optional
        Output normalization A. Default is 1.0; use :func:`compute_norm` and
        :meth:`with_norm` to set it for a constellation.
    """

    def __repr__(self):
        return (
            f"{self.__class__.__name__}(alpha={self.alpha!r}, beta={self.beta!r}, "
            f"ibo_db={self.ibo_db!r}, backoff_reference={self.backoff_reference!r}, "
            f"a_norm={self.a_norm!r})"
        )

    def __init__(
        self,
        alpha=2.1587,
        beta=1.1517,
        ibo_db=40.0,
        backoff_reference="peak",
        power=None,
        a_norm=1.0,
    ):
        self.alpha = float(alpha)
        self.beta = float(beta)
        self.ibo_db = float(ibo_db)
        self.backoff_reference = backoff_reference
        self.power = power
        self.b_scale = ibo_to_scale(
            self.alpha, self.beta, self.ibo_db, backoff_reference, power
        )

        if a_norm <= 0:
            raise ValueError("`a_norm` must be positive.")
        self.a_norm = float(a_norm)

    def gain(self, x):
        """AM/AM response g_NL(x), without the output normalization."""
        return saleh_am_am(self, x)

    def slope(self, x):
        """
        Derivative of the AM/AM response, alpha B (1 - beta u**2) / (1 + beta u**2)**2
        with u = B x.
        """
        u = self.b_scale * asarray(x, dtype=float64)
        den = 1.0 + self.beta * u * u
        return self.alpha * self.b_scale * (1.0 - self.beta * u * u) / (den * den)

    def amplify(self, x):
        """Normalized amplifier output y = A g_NL(x)."""
        return self.a_norm * self.gain(x)

    def with_norm(self, a_norm):
        return type(self)(
            alpha=self.alpha,
            beta=self.beta,
            ibo_db=self.ibo_db,
            backoff_reference=self.backoff_reference,
            power=self.power,
            a_norm=a_norm,
        )


class IdealAmplifier(HpaModel):
    """
    Linear amplifier, g(x) = x. Reference model for the undistorted channel.
    """

    def __repr__(self):
        return f"IdealAmplifier(a_norm={self.a_norm!r})"

    def __init__(self, a_norm=1.0, **kwargs):
        if kwargs.get("backoff_reference", "peak") != "peak":
            warn("Back-off has no effect on an ideal amplifier.", UserWarning)
        super().__init__(alpha=1.0, beta=1.0, ibo_db=0.0, a_norm=a_norm)
        self.b_scale = 1.0

    def gain(self, x):
        g = asarray(x, dtype=float64)
        return float(g) if g.ndim == 0 else g

    def slope(self, x):
        return ones_like(asarray(x, dtype=float64))

    def with_norm(self, a_norm):
        return IdealAmplifier(a_norm=a_norm)


def saleh_am_am(hpa, x):
    """
    Saleh AM/AM characteristic.

    Parameters
    ----------
    hpa : HpaModel
        Amplifier parameters.
    x : {float, numpy.ndarray}
        Real input amplitude(s).

    Returns
    -------
    g : {float, numpy.ndarray}
        alpha B x / (1 + beta (B x)**2), an odd function of `x`.
    """
    u = hpa.b_scale * asarray(x, dtype=float64)
    g = hpa.alpha * u / (1.0 + hpa.beta * u * u)
    return float(g) if g.ndim == 0 else g


def compute_norm(hpa, stats, levels):
    """
    Output normalization keeping the amplified power equal to the input power.

    Parameters
    ----------
    hpa : HpaModel
        Amplifier (its current `a_norm` is ignored).
    stats : skccm.encoder.StationaryStats
        Stationary probabilities of the constellation points.
    levels : numpy.ndarray
        Constellation point of each state/symbol, same size as `stats.dist`.

    Returns
    -------
    a_norm : float
        A = sqrt(P / sum_k dist[k] g(x(k))**2), with P = sum_k dist[k] x(k)**2.

    Raises
    ------
    NormalizationError
        If the amplified constellation has zero power.
    """
    levels = asarray(levels, dtype=float64)
    if levels.shape != stats.dist.shape:
        raise ValueError("`levels` must have one entry per state of `stats.dist`.")

    g = hpa.gain(levels)
    denom = float(stats.dist @ (g * g))
    if not denom > 0.0:
        raise NormalizationError("Amplified constellation has zero power.")

    return float(sqrt(stats.power(levels) / denom))
