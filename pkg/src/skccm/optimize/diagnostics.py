"""
Diagnostics of optimized conjugation functions

skccm developers
"""
from numpy import asarray, abs as np_abs, diff, percentile, zeros, float64
from pandas import DataFrame

from skccm.optimize.optimizer import OptimizerConfig, OptimizationError, optimize_h

__all__ = ["compare_seeds", "slope_ratio", "mass_near"]


def compare_seeds(encoder, hpa, loops, cfg, seeds=(1, 2, 3), stats=None):
    """
    Run the optimizer from the linear seed and from random increasing seeds.

    Parameters
    ----------
    encoder : skccm.encoder.CcmEncoder
    hpa : skccm.channel.HpaModel
    loops : list of skccm.bound.ErrorLoop
    cfg : OptimizerConfig
        Base settings; `seed_shape` and `seed` are replaced per run.
    seeds : iterable of int, optional
        Seeds of the random initial functions. Default is (1, 2, 3).
    stats : {None, skccm.encoder.StationaryStats}, optional

    Returns
    -------
    runs : pandas.DataFrame
        Columns seed_shape, seed, final_objective, converged and relative_spread, the
        relative distance of each final objective to the best one.
    """
    rows = []
    runs = [("linear", 0)] + [("random", int(s)) for s in seeds]
    for shape, seed in runs:
        run_cfg = OptimizerConfig(
            m=cfg.m,
            ebn0_db=cfg.ebn0_db,
            max_iterations=cfg.max_iterations,
            objective_tolerance=cfg.objective_tolerance,
            step_tolerance=cfg.step_tolerance,
            seed_shape=shape,
            seed=seed,
        )
        try:
            trace = optimize_h(encoder, hpa, loops, run_cfg, stats=stats)
        except OptimizationError as e:
            trace = e.trace
        rows.append((shape, seed, trace.final_objective, trace.converged))

    res = DataFrame(rows, columns=["seed_shape", "seed", "final_objective", "converged"])
    best = res["final_objective"].min()
    res["relative_spread"] = (res["final_objective"] - best) / best
    return res


def slope_ratio(conj, low=10, high=90):
    """
    Ratio of the `high` to the `low` percentile of the segment slopes of a conjugation
    function. 1 for the identity; large when flat and steep sections alternate.
    """
    slopes = diff(conj.samples) * conj.m
    return float(percentile(slopes, high) / percentile(slopes, low))


def mass_near(hist, centers, width, targets=(0.0, 0.5, 1.0)):
    """
    Fraction of a histogram within `width` of any of the target values.

    Parameters
    ----------
    hist : array-like
        Bin counts.
    centers : array-like
        Bin centers.
    width : float
        Half width of the window around each target.
    targets : tuple of float, optional
        Default is (0, 0.5, 1).

    Returns
    -------
    mass : float
        0.0 for an empty histogram.
    """
    hist = asarray(hist, dtype=float64)
    centers = asarray(centers, dtype=float64)
    total = hist.sum()
    if total <= 0:
        return 0.0

    near = zeros(centers.size, dtype=bool)
    for t in targets:
        near |= np_abs(centers - t) <= width
    return float(hist[near].sum() / total)
