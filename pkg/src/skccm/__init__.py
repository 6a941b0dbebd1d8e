"""
Scikit Chaos-Coded Modulation (:mod:`skccm`)
============================================

.. currentmodule:: skccm

Experiment Processes
--------------------

.. autosummary::
    :toctree: generated/

    BaseProcess
"""
import importlib.metadata

try:
    __version__ = importlib.metadata.version("scikit-chaos-coded-modulation")
except importlib.metadata.PackageNotFoundError:  # pragma: no cover
    __version__ = "0.0.0"

from skccm.base import BaseProcess

from skccm import utility
from skccm import encoder
from skccm import channel
from skccm import decoding
from skccm import bound
from skccm import optimize
from skccm import baseline
from skccm import experiment


__all__ = [
    "BaseProcess",
    "utility",
    "encoder",
    "channel",
    "decoding",
    "bound",
    "optimize",
    "baseline",
    "experiment",
    "__version__",
]
