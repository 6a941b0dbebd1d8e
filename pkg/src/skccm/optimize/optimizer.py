"""
Minimization of the union bound over the conjugation function

skccm developers
"""
from dataclasses import dataclass, field
import logging

from numpy import (
    asarray,
    concatenate,
    diff,
    float64,
    isfinite,
    log,
    zeros,
)
from numpy.linalg import norm
from scipy.optimize import minimize
from scipy.special import softmax

from skccm.encoder.conjugation import ConjugationFunction, interpolation_matrix
from skccm.encoder.core import stationary_distribution
from skccm.bound.union import StagedBound
from skccm.utility.internal import keyed_rng, linear_to_db

__all__ = [
    "OptimizationError",
    "OptimizerConfig",
    "OptimizationTrace",
    "optimize_h",
    "seed_conjugation",
]

logger = logging.getLogger(__name__)

_SEED_SHAPES = ("linear", "random")
# bounds on the softmax parameters, keeps every increment above 1e-9 for M <= 101
_U_BOUND = 8.0
# consecutive small relative changes needed to stop
_PATIENCE = 5


class OptimizationError(RuntimeError):
    """
    The optimizer hit its iteration cap. `trace` holds the best iterate found.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class OptimizerConfig:
    """
    Conjugation function optimizer settings.

    Parameters
    ----------
    m : int, optional
        Number of segments M of the piecewise linear conjugation function. Default is
        101.
    ebn0_db : float, optional
        Eb/N0 at which the bound is minimized. Default is 10.0.
    max_iterations : int, optional
        Iteration cap. Default is 2000.
    objective_tolerance : float, optional
        Relative change of the objective below which an iteration counts as stalled.
        The optimizer stops after 5 stalled iterations in a row. Default is 1e-8.
    step_tolerance : float, optional
        Parameter step norm below which the optimizer stops. Default is 1e-10.
    seed_shape : {"linear", "random"}, optional
        Initial conjugation function: the identity, or a random strictly increasing
        function. Default is "linear".
    seed : int, optional
        Seed of the random initial function. Default is 0.
    """

    def __repr__(self):
        return (
            f"OptimizerConfig(m={self.m}, ebn0_db={self.ebn0_db}, "
            f"max_iterations={self.max_iterations}, "
            f"objective_tolerance={self.objective_tolerance}, "
            f"step_tolerance={self.step_tolerance}, seed_shape={self.seed_shape!r}, "
            f"seed={self.seed})"
        )

    def __init__(
        self,
        m=101,
        ebn0_db=10.0,
        max_iterations=2000,
        objective_tolerance=1e-8,
        step_tolerance=1e-10,
        seed_shape="linear",
        seed=0,
    ):
        if int(m) < 2:
            raise ValueError("`m` must be at least 2.")
        if objective_tolerance <= 0 or step_tolerance <= 0:
            raise ValueError("Tolerances must be positive.")
        if int(max_iterations) < 1:
            raise ValueError("`max_iterations` must be at least 1.")
        if seed_shape not in _SEED_SHAPES:
            raise ValueError(f"`seed_shape` must be one of {_SEED_SHAPES}.")

        self.m = int(m)
        self.ebn0_db = float(ebn0_db)
        self.max_iterations = int(max_iterations)
        self.objective_tolerance = float(objective_tolerance)
        self.step_tolerance = float(step_tolerance)
        self.seed_shape = seed_shape
        self.seed = int(seed)


@dataclass
class OptimizationTrace:
    """
    Attributes
    ----------
    iterations : list of tuple
        (objective, constraint margin) of every accepted iterate, the seed first. The
        margin is the smallest increment of the samples.
    final : skccm.encoder.ConjugationFunction
        Best conjugation function found.
    final_objective : float
        Bound value of `final`.
    converged : bool
        False if the iteration cap was reached.
    n_evaluations : int
        Number of objective evaluations.
    """

    iterations: list = field(default_factory=list)
    final: ConjugationFunction = None
    final_objective: float = float("nan")
    converged: bool = False
    n_evaluations: int = 0

    @property
    def objectives(self):
        return [it[0] for it in self.iterations]


def seed_conjugation(cfg):
    """
    Initial conjugation function and its softmax parameters.

    Returns
    -------
    conj : skccm.encoder.ConjugationFunction
    u : numpy.ndarray
        Parameters with softmax(u) equal to the increments of `conj`.
    """
    if cfg.seed_shape == "linear":
        return ConjugationFunction.identity(cfg.m), zeros(cfg.m, dtype=float64)

    rng = keyed_rng(cfg.seed, 0)
    u = rng.normal(scale=0.5, size=cfg.m).clip(-_U_BOUND, _U_BOUND)
    return ConjugationFunction.from_increments(softmax(u)), u


def _level_gradient(func, levels, step):
    grad = zeros(levels.size, dtype=float64)
    for k in range(levels.size):
        xp = levels.copy()
        xm = levels.copy()
        xp[k] += step
        xm[k] -= step
        grad[k] = (func(xp) - func(xm)) / (2.0 * step)
    return grad


class _Objective:
    """
    log of the bound as a function of the softmax parameters, with its gradient chained
    from the level space: levels = 2 W s - 1, s = [0, cumsum(softmax(u))].
    """

    def __init__(self, staged, hpa, q, cfg, objective=None, fd_step=1e-6):
        self.staged = staged
        self.hpa = hpa
        self.cfg = cfg
        self.objective = objective
        self.fd_step = fd_step
        self.w = interpolation_matrix(cfg.m, q)
        self.n_evaluations = 0
        self._last = (None, None)

    def levels(self, u):
        delta = softmax(u)
        s = concatenate(([0.0], delta.cumsum()))
        return delta, 2.0 * (self.w @ s) - 1.0

    def value(self, levels):
        if self.objective is not None:
            return float(self.objective(levels))
        return self.staged.value(levels, self.hpa, self.cfg.ebn0_db)

    def level_gradient(self, levels):
        if self.objective is not None:
            return _level_gradient(self.value, levels, self.fd_step)
        return self.staged.gradient(levels, self.hpa, self.cfg.ebn0_db)

    def __call__(self, u):
        key = u.tobytes()
        if self._last[0] == key:
            return self._last[1]

        self.n_evaluations += 1
        delta, levels = self.levels(u)
        bound = self.value(levels)
        if not (isfinite(bound) and bound > 0.0):
            raise OptimizationError(f"Objective is not positive and finite ({bound!r}).")

        d_levels = self.level_gradient(levels) / bound
        d_s = 2.0 * (self.w.T @ d_levels)
        d_delta = d_s[1:][::-1].cumsum()[::-1]
        d_u = delta * (d_delta - delta @ d_delta)

        res = (float(log(bound)), d_u, bound, float(delta.min()))
        self._last = (key, res)
        return res


def optimize_h(encoder, hpa, loops, cfg, objective=None, initial=None, stats=None):
    """
    Find the conjugation function minimizing the union bound of the encoder.

    The samples are parameterized by s^i = sum_{j < i} softmax(u)_j, so every iterate
    is strictly increasing from 0 to 1 by construction. log(bound) is minimized over u
    with L-BFGS-B, u bounded to [-8, 8].

    Parameters
    ----------
    encoder : skccm.encoder.CcmEncoder
        Encoder whose map and Q define the trellis.
    hpa : skccm.channel.HpaModel
        Amplifier. Its normalization is recomputed for every candidate.
    loops : list of skccm.bound.ErrorLoop
        Error loops of the encoder trellis.
    cfg : OptimizerConfig
        Optimizer settings.
    objective : {None, callable}, optional
        Replaces the bound by `objective(levels)`, a positive function of the per-state
        output levels. Gradients are then taken by central differences with step 1e-6.
    initial : {None, skccm.encoder.ConjugationFunction}, optional
        Explicit initial function with `cfg.m` segments, overriding `cfg.seed_shape`.
    stats : {None, skccm.encoder.StationaryStats}, optional
        Stationary law of the encoder states, computed if not given.

    Returns
    -------
    trace : OptimizationTrace
        Best iterate and the per-iteration trace. The final objective never exceeds
        the seed objective.

    Raises
    ------
    OptimizationError
        If the iteration cap is reached. The exception carries the trace.
    """
    if stats is None:
        stats = stationary_distribution(encoder)
    staged = StagedBound(loops, stats.dist)
    fn = _Objective(staged, hpa, encoder.q, cfg, objective=objective)

    if initial is None:
        seed_conj, u0 = seed_conjugation(cfg)
    else:
        if initial.m != cfg.m:
            raise ValueError(f"`initial` has {initial.m} segments, expected {cfg.m}.")
        seed_conj = initial
        inc = diff(initial.samples)
        u0 = (log(inc) - log(inc).mean()).clip(-_U_BOUND, _U_BOUND)

    seed_bound = fn.value(seed_conj.levels(encoder.q))
    trace = OptimizationTrace()
    trace.iterations.append((seed_bound, float(diff(seed_conj.samples).min())))
    logger.info(f"Optimizing conjugation function, seed bound {seed_bound:.6e}")

    best = {"bound": seed_bound, "u": None}
    state = {"stalled": 0, "prev_u": asarray(u0, dtype=float64).copy(), "stopped": False}

    def callback(intermediate_result):
        u = intermediate_result.x
        _, _, bound, margin = fn(u)
        it = len(trace.iterations)
        prev = trace.iterations[-1][0]
        trace.iterations.append((bound, margin))
        logger.debug(f"iteration {it}: bound={bound:.9e} margin={margin:.3e}")

        if bound < best["bound"]:
            best["bound"] = bound
            best["u"] = u.copy()

        rel = abs(prev - bound) / max(abs(prev), 1e-300)
        state["stalled"] = state["stalled"] + 1 if rel < cfg.objective_tolerance else 0
        step = norm(u - state["prev_u"])
        state["prev_u"] = u.copy()
        if state["stalled"] >= _PATIENCE or step < cfg.step_tolerance:
            state["stopped"] = True
            raise StopIteration

    res = minimize(
        lambda u: fn(u)[:2],
        asarray(u0, dtype=float64),
        jac=True,
        method="L-BFGS-B",
        bounds=[(-_U_BOUND, _U_BOUND)] * cfg.m,
        callback=callback,
        options={"maxiter": cfg.max_iterations, "ftol": 0.0, "gtol": 1e-12},
    )

    if best["u"] is None:
        trace.final = seed_conj
        trace.final_objective = seed_bound
    else:
        trace.final = ConjugationFunction.from_increments(softmax(best["u"]))
        trace.final_objective = float(fn.value(trace.final.levels(encoder.q)))
        if trace.final_objective > seed_bound:
            trace.final = seed_conj
            trace.final_objective = seed_bound

    trace.n_evaluations = fn.n_evaluations
    trace.converged = state["stopped"] or (res.status != 1)

    gain_db = (
        linear_to_db(seed_bound / trace.final_objective)
        if trace.final_objective > 0
        else float("inf")
    )
    logger.info(
        f"Optimizer finished after {len(trace.iterations) - 1} iterations "
        f"({fn.n_evaluations} evaluations): bound {trace.final_objective:.6e} "
        f"({gain_db:.2f} dB below the seed), "
        f"converged={trace.converged}"
    )
    if not trace.converged:
        raise OptimizationError(
            f"Optimizer reached {cfg.max_iterations} iterations without converging.",
            trace=trace,
        )
    return trace
