"""
Classical Baseline Link (:mod:`skccm.baseline`)
===============================================

.. currentmodule:: skccm.baseline

.. autosummary::
    :toctree: generated/

    ConvCode
    CodeTrellis
    cc_encode
    impulse_response
    PamMapper
    pam_map
    BaselineLink
    run_baseline
"""
from skccm.baseline.convcode import *
from skccm.baseline import convcode
from skccm.baseline.pam import *
from skccm.baseline import pam
from skccm.baseline.link import *
from skccm.baseline import link

__all__ = (
    ["convcode", "pam", "link"] + convcode.__all__ + pam.__all__ + link.__all__
)
