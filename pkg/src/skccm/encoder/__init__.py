"""
Chaos-Coded Modulation Encoder (:mod:`skccm.encoder`)
=====================================================

.. currentmodule:: skccm.encoder

Encoder and Trellis
-------------------

.. autosummary::
    :toctree: generated/

    CcmEncoder
    encode_step
    encode_block
    build_trellis
    stationary_distribution
    terminate_block

Chaotic Maps
------------

.. autosummary::
    :toctree: generated/

    MapKind
    bsm_step
    mtm_step

Conjugation Functions
---------------------

.. autosummary::
    :toctree: generated/

    ConjugationFunction
    eval_h
    interpolation_matrix
    read_conjugation
    write_conjugation

Background Information
----------------------

The encoder state is kept as the integer grid index k of z = k 2**-Q, so the encoder is an
exact finite-state machine with 2**Q states and two branches per state. The conjugation
function h only relabels the output of each state, x(k) = 2 h(k 2**-Q) - 1; it never alters
the trellis, which is why the trellis, the stationary law of the states and the error loops
are computed once per (map, Q).
"""
from skccm.encoder.maps import MapKind, bsm_step, mtm_step, get_map_step
from skccm.encoder.conjugation import (
    ConjugationError,
    ConjugationFunction,
    eval_h,
    interpolation_matrix,
    read_conjugation,
    write_conjugation,
)
from skccm.encoder.core import *
from skccm.encoder import core, maps, conjugation

__all__ = (
    ["maps", "conjugation", "core"]
    + maps.__all__
    + conjugation.__all__
    + core.__all__
)
