"""
Nonlinear Channel (:mod:`skccm.channel`)
========================================

.. currentmodule:: skccm.channel

Amplifiers
----------

.. autosummary::
    :toctree: generated/

    HpaModel
    IdealAmplifier
    saleh_am_am
    ibo_to_scale
    compute_norm

Noise
-----

.. autosummary::
    :toctree: generated/

    NoiseModel
    transmit
"""
from skccm.channel.amplifier import *
from skccm.channel import amplifier
from skccm.channel.awgn import *
from skccm.channel import awgn

__all__ = ["amplifier", "awgn"] + amplifier.__all__ + awgn.__all__
