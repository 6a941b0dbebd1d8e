"""
Experiments (:mod:`skccm.experiment`)
=====================================

.. currentmodule:: skccm.experiment

Configuration
-------------

.. autosummary::
    :toctree: generated/

    ExperimentConfig
    load_config
    parse_config_text

Links
-----

.. autosummary::
    :toctree: generated/

    CcmLink
    build_link
    resolve_conjugation

Experiments
-----------

.. autosummary::
    :toctree: generated/

    run_ber
    BerCurve
    ebn0_at_ber
    run_bound
    run_optimize
    emit_pdf_histogram

Processes
---------

.. autosummary::
    :toctree: generated/

    BerSweep
    BoundTable
    ConjugationSearch
    PdfHistogram

Command Line
------------

The ``skccm`` console script runs one of the subcommands ``optimize``, ``bound``, ``ber``
or ``pdf``:

.. code-block:: sh

    skccm ber --config bsm.cfg --ebn0 2 4 6 8 --ibo-db 3 --workers 8 --out ber.csv

Every output CSV starts with comment lines echoing the resolved configuration.
"""
from skccm.experiment.config import *
from skccm.experiment import config
from skccm.experiment.links import *
from skccm.experiment import links
from skccm.experiment.ber import *
from skccm.experiment import ber
from skccm.experiment.runs import *
from skccm.experiment import runs
from skccm.experiment.processes import *
from skccm.experiment import processes

__all__ = (
    ["config", "links", "ber", "runs", "processes"]
    + config.__all__
    + links.__all__
    + ber.__all__
    + runs.__all__
    + processes.__all__
)
