"""
Experiment configuration: defaults, flat key=value files and command line overrides

skccm developers
"""
from pathlib import Path

import yaml

from skccm.base import format_value

__all__ = ["ConfigError", "ExperimentConfig", "load_config", "parse_config_text"]

SCHEMES = ("ccm_bsm", "ccm_mtm", "baseline")


class ConfigError(ValueError):
    pass


def _as_int(value):
    if isinstance(value, bool) or not isinstance(value, (int, float, str)):
        raise TypeError
    if isinstance(value, float) and not value.is_integer():
        raise TypeError
    return int(float(value)) if isinstance(value, str) else int(value)


def _as_float(value):
    if isinstance(value, bool):
        raise TypeError
    return float(value)


def _as_str(value):
    if not isinstance(value, str):
        raise TypeError
    return value


def _as_bool(value):
    if not isinstance(value, bool):
        raise TypeError
    return value


def _as_optional_int(value):
    return None if value is None else _as_int(value)


def _as_float_list(value):
    if isinstance(value, (list, tuple)):
        return [_as_float(v) for v in value]
    return [_as_float(value)]


# key: (default, converter)
_KEYS = {
    "scheme": ("ccm_bsm", _as_str),
    "ccm.q": (5, _as_int),
    "ccm.initial_state": (0, _as_int),
    "ccm.conjugation": ("identity", _as_str),
    "hpa.model": ("saleh", _as_str),
    "hpa.alpha": (2.1587, _as_float),
    "hpa.beta": (1.1517, _as_float),
    "hpa.ibo_db": (40.0, _as_float),
    "hpa.backoff_reference": ("peak", _as_str),
    "channel.ebn0_db": ([2.0, 4.0, 6.0, 8.0, 10.0], _as_float_list),
    "channel.seed": (0, _as_int),
    "decoder.metric": ("nominal", _as_str),
    "decoder.termination": (True, _as_bool),
    "bound.l_min": (None, _as_optional_int),
    "bound.l_max": (None, _as_optional_int),
    "optimizer.m": (101, _as_int),
    "optimizer.ebn0_db": (10.0, _as_float),
    "optimizer.max_iterations": (2000, _as_int),
    "optimizer.objective_tolerance": (1e-8, _as_float),
    "optimizer.step_tolerance": (1e-10, _as_float),
    "optimizer.seed_shape": ("linear", _as_str),
    "optimizer.seed": (0, _as_int),
    "sim.block_info_bits": (10000, _as_int),
    "sim.stop_min_errors": (100, _as_int),
    "sim.stop_max_bits": (100_000_000, _as_int),
    "sim.workers": (1, _as_int),
    "pdf.samples": (1_000_000, _as_int),
}

# keys that never change results
_NOT_ECHOED = ("sim.workers",)


class ExperimentConfig:
    """
    Resolved configuration of an experiment.

    Values are read with ``cfg["hpa.ibo_db"]``; the most used ones are also
    attributes.

    Parameters
    ----------
    values : {None, dict}, optional
        Values for any of the known keys. Missing keys take their defaults.

    Raises
    ------
    ConfigError
        For unknown keys, values of the wrong type, or inconsistent settings.
    """

    def __repr__(self):
        return f"ExperimentConfig({self._values!r})"

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self._values == other._values
        return False

    def __init__(self, values=None):
        self._values = {k: v[0] for k, v in _KEYS.items()}
        self.update(values or {})

    def __getitem__(self, key):
        return self._values[key]

    def update(self, values):
        """
        Set values, converting and validating them. Returns the configuration.
        """
        for key, value in values.items():
            if key not in _KEYS:
                raise ConfigError(f"Unknown configuration key [{key}].")
            try:
                self._values[key] = _KEYS[key][1](value)
            except (TypeError, ValueError):
                raise ConfigError(f"Invalid value ({value!r}) for key [{key}].")
        self._validate()
        return self

    def _validate(self):
        v = self._values
        if v["scheme"] not in SCHEMES:
            raise ConfigError(f"`scheme` must be one of {SCHEMES}, got {v['scheme']!r}.")
        if v["ccm.q"] < 1:
            raise ConfigError("`ccm.q` must be a positive integer.")
        if not 0 <= v["ccm.initial_state"] < (1 << v["ccm.q"]):
            raise ConfigError("`ccm.initial_state` must be a state of the 2**q grid.")
        if v["hpa.model"] not in ("saleh", "ideal"):
            raise ConfigError("`hpa.model` must be 'saleh' or 'ideal'.")
        if v["hpa.backoff_reference"] not in ("peak", "average"):
            raise ConfigError("`hpa.backoff_reference` must be 'peak' or 'average'.")
        if v["hpa.alpha"] <= 0 or v["hpa.beta"] <= 0:
            raise ConfigError("`hpa.alpha` and `hpa.beta` must be positive.")

        grid = v["channel.ebn0_db"]
        if not grid:
            raise ConfigError("The Eb/N0 grid is empty.")
        if any(b <= a for a, b in zip(grid[:-1], grid[1:])):
            raise ConfigError("The Eb/N0 grid must be strictly increasing.")
        if v["channel.seed"] < 0:
            raise ConfigError("`channel.seed` must be non-negative.")

        if v["decoder.metric"] not in ("nominal", "hpa_aware"):
            raise ConfigError("`decoder.metric` must be 'nominal' or 'hpa_aware'.")
        if v["optimizer.seed_shape"] not in ("linear", "random"):
            raise ConfigError("`optimizer.seed_shape` must be 'linear' or 'random'.")
        if v["optimizer.m"] < 2:
            raise ConfigError("`optimizer.m` must be at least 2.")

        if v["sim.block_info_bits"] < v["ccm.q"]:
            raise ConfigError("`sim.block_info_bits` must be at least `ccm.q`.")
        if v["sim.stop_min_errors"] < 1 or v["sim.stop_max_bits"] < 1:
            raise ConfigError("Stopping limits must be positive.")
        if v["sim.workers"] < 1:
            raise ConfigError("`sim.workers` must be at least 1.")
        if v["pdf.samples"] < 0:
            raise ConfigError("`pdf.samples` must be non-negative.")

    @property
    def scheme(self):
        return self._values["scheme"]

    @property
    def is_ccm(self):
        return self.scheme != "baseline"

    @property
    def q(self):
        return self._values["ccm.q"]

    @property
    def conj_source(self):
        return self._values["ccm.conjugation"]

    @property
    def ebn0_grid(self):
        return list(self._values["channel.ebn0_db"])

    @property
    def master_seed(self):
        return self._values["channel.seed"]

    @property
    def workers(self):
        return self._values["sim.workers"]

    @property
    def block_info_bits(self):
        return self._values["sim.block_info_bits"]

    @property
    def stop_min_errors(self):
        return self._values["sim.stop_min_errors"]

    @property
    def stop_max_bits(self):
        return self._values["sim.stop_max_bits"]

    def echo(self):
        """
        Resolved configuration for result headers, without the keys that do not affect
        results.
        """
        return {k: v for k, v in self._values.items() if k not in _NOT_ECHOED}

    def to_text(self):
        """
        Configuration in the key=value file format.
        """
        return "".join(f"{k}={format_value(v)}\n" for k, v in self._values.items())


def parse_config_text(text, source="<string>"):
    """
    Parse flat key=value configuration text.

    Blank lines and lines starting with `#` are skipped. Values are typed with the YAML
    scalar rules, so ``[2, 4, 6]`` is a list and ``true`` a boolean.

    Returns
    -------
    values : dict
    """
    values = {}
    for n, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, raw = line.partition("=")
        if not sep or not key.strip():
            raise ConfigError(f"Line {n} of {source} is not of the form key=value.")
        try:
            values[key.strip()] = yaml.safe_load(raw.strip()) if raw.strip() else None
        except yaml.YAMLError:
            raise ConfigError(f"Cannot parse the value on line {n} of {source}.")
    return values


def load_config(file=None, overrides=None):
    """
    Build an experiment configuration from the defaults, an optional file, then
    overrides.

    Parameters
    ----------
    file : {None, str, path-like}, optional
        Configuration file in the flat key=value format.
    overrides : {None, dict}, optional
        Values applied last, eg from the command line.

    Returns
    -------
    cfg : ExperimentConfig
    """
    values = {}
    if file is not None:
        path = Path(file)
        try:
            text = path.read_text()
        except OSError as e:
            raise ConfigError(f"Cannot read configuration file ({file}): {e}")
        values.update(parse_config_text(text, source=str(path)))

    values.update({k: v for k, v in (overrides or {}).items() if v is not None})
    return ExperimentConfig(values)
