"""
Experiment processes: run one experiment and save its results with the configuration

skccm developers
"""
from pathlib import Path

from pandas import DataFrame

from skccm.base import BaseProcess
from skccm.encoder import write_conjugation
from skccm.optimize import OptimizationError
from skccm.experiment.ber import run_ber
from skccm.experiment.runs import run_bound, run_optimize, emit_pdf_histogram

__all__ = ["BerSweep", "BoundTable", "ConjugationSearch", "PdfHistogram"]


class _ExperimentProcess(BaseProcess):
    def __init__(self, cfg):
        super().__init__(**cfg.echo())
        self.cfg = cfg


class BerSweep(_ExperimentProcess):
    """
    Simulated bit error rate over the Eb/N0 grid.

    Parameters
    ----------
    cfg : skccm.experiment.ExperimentConfig
    """

    def predict(self, file=None):
        """
        Run the sweep, and save it to `file` if given.

        Returns
        -------
        curve : skccm.experiment.BerCurve
        """
        super().predict()
        curve = run_ber(self.cfg)
        if file is not None:
            self.save_results(curve.to_frame(), file)
        return curve


class BoundTable(_ExperimentProcess):
    """
    Union bound and per-loop contributions over the Eb/N0 grid.
    """

    def predict(self, file=None):
        super().predict()
        table = run_bound(self.cfg)
        if file is not None:
            self.save_results(table, file)
        return table


class ConjugationSearch(_ExperimentProcess):
    """
    Conjugation function optimization. Saves the function in the text format and the
    trace as `<stem>_trace.csv` next to it, also when the optimizer does not converge.
    """

    @staticmethod
    def trace_file(file):
        p = Path(file)
        return p.with_name(f"{p.stem}_trace.csv")

    def _save(self, trace, file):
        write_conjugation(trace.final, file)
        rows = DataFrame(trace.iterations, columns=["objective", "constraint_margin"])
        rows.insert(0, "iteration", range(len(rows)))
        self.save_results(rows, self.trace_file(file))

    def predict(self, file=None):
        """
        Returns
        -------
        trace : skccm.optimize.OptimizationTrace

        Raises
        ------
        skccm.optimize.OptimizationError
            After saving the best iterate, if the optimizer did not converge.
        """
        super().predict()
        try:
            trace = run_optimize(self.cfg)
        except OptimizationError as e:
            if file is not None and e.trace is not None:
                self._save(e.trace, file)
            raise

        if file is not None:
            self._save(trace, file)
        return trace


class PdfHistogram(_ExperimentProcess):
    """
    Histogram of the conjugated encoder samples.
    """

    def predict(self, file=None, samples=None):
        super().predict()
        hist = emit_pdf_histogram(self.cfg, samples=samples)
        if file is not None:
            self.save_results(hist, file)
        return hist
