"""
Bound tables, optimization runs and sample histograms

skccm developers
"""
import logging

from numpy import histogram, linspace, zeros, int64
from pandas import DataFrame

from skccm.encoder import encode_block, stationary_distribution
from skccm.bound import StagedBound
from skccm.optimize import optimize_h
from skccm.experiment.config import ConfigError
from skccm.experiment.links import (
    build_encoder,
    build_hpa,
    build_optimizer_config,
    loops_for,
    resolve_conjugation,
)
from skccm.utility.internal import keyed_rng

__all__ = ["run_bound", "run_optimize", "emit_pdf_histogram", "N_PDF_BINS"]

logger = logging.getLogger(__name__)

N_PDF_BINS = 101
# stream key of the histogram bits, apart from every (Eb/N0, block) key
_PDF_KEY = (1 << 32, 0)
_PDF_CHUNK = 1 << 18

_BOUND_COLUMNS = [
    "ebn0_db",
    "bound",
    "loop_id",
    "loop_length",
    "loop_weight",
    "contribution",
]


def _ccm_encoder(cfg, conj):
    if not cfg.is_ccm:
        raise ConfigError(f"Scheme {cfg.scheme!r} has no chaos-coded encoder.")
    encoder = build_encoder(cfg)
    if conj is None:
        conj = resolve_conjugation(cfg, encoder)
    return encoder if conj is None else encoder.with_conjugation(conj)


def run_bound(cfg, conj=None):
    """
    Union bound over the Eb/N0 grid, with the contribution of every loop.

    Parameters
    ----------
    cfg : skccm.experiment.ExperimentConfig
    conj : {None, skccm.encoder.ConjugationFunction}, optional
        Conjugation function, resolved from the configuration if not given.

    Returns
    -------
    table : pandas.DataFrame
        Long format, one row per (Eb/N0, loop) with the columns ebn0_db, bound,
        loop_id, loop_length, loop_weight and contribution. Without any loop, one row
        per Eb/N0 with bound 0 and loop_id -1.
    """
    encoder = _ccm_encoder(cfg, conj)
    stats = stationary_distribution(encoder)
    loops = loops_for(cfg, encoder)
    staged = StagedBound(loops, stats.dist)
    hpa = build_hpa(cfg, stats.p)

    rows = []
    for ebn0_db in cfg.ebn0_grid:
        if not loops:
            rows.append((ebn0_db, 0.0, -1, 0, 0, 0.0))
            continue
        per_loop = staged.contributions(encoder.levels, hpa, ebn0_db)
        total = float(per_loop.sum())
        logger.info(f"Eb/N0 {ebn0_db} dB: bound {total:.6e}")
        for i, (loop, c) in enumerate(zip(loops, per_loop)):
            rows.append((ebn0_db, total, i, loop.length, loop.weight, float(c)))

    return DataFrame(rows, columns=_BOUND_COLUMNS)


def run_optimize(cfg):
    """
    Optimize the conjugation function of the configured chaos-coded scheme.

    Returns
    -------
    trace : skccm.optimize.OptimizationTrace

    Raises
    ------
    skccm.optimize.OptimizationError
        On non-convergence, carrying the trace of the best iterate.
    """
    if not cfg.is_ccm:
        raise ConfigError("Only chaos-coded schemes have a conjugation function.")
    encoder = build_encoder(cfg)
    stats = stationary_distribution(encoder)
    return optimize_h(
        encoder,
        build_hpa(cfg, stats.p),
        loops_for(cfg, encoder),
        build_optimizer_config(cfg),
        stats=stats,
    )


def emit_pdf_histogram(cfg, samples=None, conj=None):
    """
    Histogram of the conjugated samples s_n = h(z_n) of the encoder driven by a seeded
    random bit stream.

    Parameters
    ----------
    cfg : skccm.experiment.ExperimentConfig
    samples : {None, int}, optional
        Number of samples. Default is `pdf.samples` from the configuration.
    conj : {None, skccm.encoder.ConjugationFunction}, optional

    Returns
    -------
    hist : pandas.DataFrame
        101 bins over [0, 1] with the columns bin_left, bin_right, center, count and
        density. All counts are 0 when no samples are requested.
    """
    samples = cfg["pdf.samples"] if samples is None else int(samples)
    if samples < 0:
        raise ValueError("`samples` must be non-negative.")
    encoder = _ccm_encoder(cfg, conj)

    edges = linspace(0.0, 1.0, N_PDF_BINS + 1)
    counts = zeros(N_PDF_BINS, dtype=int64)
    rng = keyed_rng(cfg.master_seed, *_PDF_KEY)

    state = cfg["ccm.initial_state"]
    done = 0
    while done < samples:
        n = min(_PDF_CHUNK, samples - done)
        seq = encode_block(encoder, rng.integers(0, 2, size=n, dtype="int8"), state)
        counts += histogram(seq.s, bins=edges)[0]
        state = int(seq.z[-1])
        done += n

    width = edges[1] - edges[0]
    density = counts / (samples * width) if samples > 0 else zeros(N_PDF_BINS)
    return DataFrame(
        {
            "bin_left": edges[:-1],
            "bin_right": edges[1:],
            "center": (edges[:-1] + edges[1:]) / 2.0,
            "count": counts,
            "density": density,
        }
    )
