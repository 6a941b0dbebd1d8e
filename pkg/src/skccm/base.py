"""
Base classes for the skccm experiment processes

skccm developers
"""
import logging

from pandas import DataFrame


def format_value(value):
    """
    Format a configuration value so that it reads back to the same value.
    """
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(format_value(v) for v in value) + "]"
    if isinstance(value, float):
        return repr(value)
    return str(value)


class BaseProcess:
    """
    The base class for the experiment processes. Holds the resolved configuration the
    process was built with, and writes results as CSV files headed by that
    configuration. Should be subclassed.
    """

    def __str__(self):
        return self._name

    def __repr__(self):
        ret = f"{self._name}("
        for k in self._kw:
            ret += f"{k}={self._kw[k]!r}, "
        if ret[-1] != "(":
            ret = ret[:-2]
        ret += ")"

        return ret

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self._kw == other._kw
        else:
            return False

    def __init__(self, **kwargs):
        """
        Intended to be subclassed

        Parameters
        ----------
        kwargs
            Resolved configuration of the process, echoed in saved results.
        """
        self._name = self.__class__.__name__
        self._kw = kwargs

        self.logger = logging.getLogger(__name__)

    def predict(self, *args, **kwargs):
        """
        Intended to be overwritten in the subclass. Should still be called
        with super.
        """
        self.logger.info(f"Entering {self._name} processing with call {self!r}")

    def save_results(self, results, file_name):
        """
        Save results to a csv file, preceded by comment lines with the package version
        and every configuration key.

        Parameters
        ----------
        results : {dict, pandas.DataFrame}
            Columns of results.
        file_name : str
            File name. Can be optionally formatted with `{name}`, the process name.

        Returns
        -------
        file_name : str
            Formatted file name.
        """
        # avoid circular import
        from skccm import __version__ as skccm_version

        file_name = str(file_name).format(name=self._name)

        lines = [f"# scikit-chaos-coded-modulation {skccm_version}\n"]
        lines += [f"# {k}={format_value(self._kw[k])}\n" for k in self._kw]

        with open(file_name, "w") as f:
            f.writelines(lines)

        DataFrame(results).to_csv(file_name, index=False, mode="a")

        return file_name
