"""
Conjugation Function Optimization (:mod:`skccm.optimize`)
=========================================================

.. currentmodule:: skccm.optimize

.. autosummary::
    :toctree: generated/

    OptimizerConfig
    OptimizationTrace
    OptimizationError
    optimize_h
    seed_conjugation

Diagnostics
-----------

.. autosummary::
    :toctree: generated/

    compare_seeds
    slope_ratio
    mass_near
"""
from skccm.optimize.optimizer import *
from skccm.optimize import optimizer
from skccm.optimize.diagnostics import *
from skccm.optimize import diagnostics

__all__ = ["optimizer", "diagnostics"] + optimizer.__all__ + diagnostics.__all__
