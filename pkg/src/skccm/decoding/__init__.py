"""
Trellis Decoding (:mod:`skccm.decoding`)
========================================

.. currentmodule:: skccm.decoding

MAP Decoding
------------

.. autosummary::
    :toctree: generated/

    DecoderConfig
    PosteriorBlock
    map_decode
    branch_metrics
    bit_llrs

Viterbi Decoding
----------------

.. autosummary::
    :toctree: generated/

    viterbi_decode
"""
from skccm.decoding.bcjr import *
from skccm.decoding import bcjr
from skccm.decoding.viterbi import viterbi_decode
from skccm.decoding import viterbi

__all__ = ["bcjr", "viterbi"] + bcjr.__all__ + viterbi.__all__
