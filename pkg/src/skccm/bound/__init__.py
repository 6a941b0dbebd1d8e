"""
Error Bounds (:mod:`skccm.bound`)
=================================

.. currentmodule:: skccm.bound

Error Loops
-----------

.. autosummary::
    :toctree: generated/

    ErrorLoop
    enumerate_loops

Union Bound
-----------

.. autosummary::
    :toctree: generated/

    d_eq
    pep
    union_bound
    StagedBound
    BoundResult

Background Information
----------------------

The decoder compares the received samples against the nominal levels x(k), while the
channel delivers A g(x(k)). For such a mismatched decoder the pairwise error probability
between two paths depends on an equivalent distance that may be negative when the
amplifier compression moves a received sequence closer to a competitor. The bound sums
the pairwise error probability of every instance of every error loop, weighted by the
number of bit errors of the loop and by the probability 2**-(Q + L) of the instance.
Error loops are the shortest diverging and re-merging path pairs of the trellis; their
instance lists depend only on the map and Q, so they are enumerated once and reused for
every conjugation function.
"""
from skccm.bound.loops import *
from skccm.bound import loops
from skccm.bound.union import *
from skccm.bound import union

__all__ = ["loops", "union"] + loops.__all__ + union.__all__
