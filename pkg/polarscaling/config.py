"""
PolarScaling - Settings

This module defines the `Settings` class holding the numerical knobs shared by
the package (grid resolution, tail bands, alphabet caps, sweep grids, ...) and
the loader that reads them from JSON.
"""

import json
import logging
import os
from dataclasses import asdict, dataclass, field, fields
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Union

logger = logging.getLogger(__name__)

# Environment variable that can override the settings file location
SETTINGS_ENV_VAR = "POLARSCALING_SETTINGS_JSON"

# Relative path inside the package for the bundled default settings
DEFAULT_SETTINGS_RESOURCE = "data/settings.json"

JsonPath = Union[str, Path]


def load_json_resource(
    json_file: Optional[JsonPath], env_var: str, resource_name: str
) -> Mapping[str, Any]:
    """
    Read a JSON document from the first available source: the explicit
    `json_file`, the file named by the environment variable `env_var`, or the
    package resource `resource_name`.
    """
    path = json_file if json_file is not None else os.environ.get(env_var)
    if path:
        logger.debug("Reading %s", path)
        return json.loads(Path(path).read_text(encoding="utf-8"))
    # bundled package data
    return json.loads(
        resources.files("polarscaling").joinpath(resource_name).read_text(encoding="utf-8")
    )


@dataclass(frozen=True)
class Settings:
    """
    Numerical settings of the package.

    Parameters
    ----------
    grid_exponent : int
        Grid resolution exponent; functionals are sampled on M = 2**grid_exponent
        intervals of [0, 1]. Must be at least 10.
    tail_band : float
        Width of the boundary bands [0, tail_band] and [1 - tail_band, 1]
        where the boundary recursions are evaluated analytically.
    tail_probes : int
        Number of log-spaced evaluation points per tail band used when
        taking suprema of ratio curves.
    tail_node_cap : int
        Maximum number of live nodes in one level of the tail recursion.
    alphabet_cap : int
        Maximum output alphabet size of an explicit channel after merging.
    product_cap : int
        Maximum size of an unmerged product alphabet formed by a transform.
    spectrum_max_level : int
        Largest level n accepted by spectrum evolution.
    llr_saturation : float
        Magnitude (nats) at which log-likelihood ratios are clipped.
    mi_candidates : int
        Number of scan points of the spread interval in the
        mutual-information supremum, before local refinement.
    sweep_eta : Tuple[float, ...]
        Default grid of eta values for blocklength sweeps.
    sweep_kappa : Tuple[float, ...]
        Default grid of kappa values for blocklength sweeps.
    batch_size : int
        Number of Monte Carlo trials decoded together.
    """

    grid_exponent: int = 17
    tail_band: float = 1e-3
    tail_probes: int = 16
    tail_node_cap: int = 4_000_000
    alphabet_cap: int = 1 << 16
    product_cap: int = 1 << 24
    spectrum_max_level: int = 26
    llr_saturation: float = 700.0
    mi_candidates: int = 32
    sweep_eta: Tuple[float, ...] = field(
        default=(0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45)
    )
    sweep_kappa: Tuple[float, ...] = field(default=(0.5, 1.0, 2.0, 4.0, 8.0, 16.0))
    batch_size: int = 1000

    def __post_init__(self):
        """
        Validate settings upon initialization.
        """
        if self.grid_exponent < 10:
            raise ValueError("grid_exponent must be at least 10 (M >= 2^10).")
        if not 0 < self.tail_band < 0.5:
            raise ValueError("tail_band must lie in (0, 0.5).")
        if self.tail_probes < 1 or self.tail_node_cap < 1:
            raise ValueError("tail_probes and tail_node_cap must be positive.")
        if self.alphabet_cap < 2 or self.product_cap < self.alphabet_cap:
            raise ValueError(
                "alphabet_cap must be at least 2 and not exceed product_cap."
            )
        if not 0 <= self.spectrum_max_level <= 30:
            raise ValueError("spectrum_max_level must lie in [0, 30].")
        if self.llr_saturation <= 0:
            raise ValueError("llr_saturation must be positive.")
        if self.mi_candidates < 2 or self.batch_size < 1:
            raise ValueError("mi_candidates must be >= 2 and batch_size >= 1.")
        if not self.sweep_eta or any(not 0 < e < 0.5 for e in self.sweep_eta):
            raise ValueError("sweep_eta values must lie in (0, 0.5).")
        if not self.sweep_kappa or any(k <= 0 for k in self.sweep_kappa):
            raise ValueError("sweep_kappa values must be positive.")

    @property
    def grid_size(self) -> int:
        """Number of grid intervals M."""
        return 1 << self.grid_exponent

    def to_dict(self) -> Dict[str, Any]:
        """Plain-JSON representation of the settings."""
        data = asdict(self)
        data["sweep_eta"] = list(self.sweep_eta)
        data["sweep_kappa"] = list(self.sweep_kappa)
        return data

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Settings":
        """
        Build settings from a mapping, filling missing keys with defaults.

        Raises
        ------
        ValueError
            If the mapping contains unknown keys or invalid values.
        """
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"Unknown settings keys: {', '.join(unknown)}")
        values = dict(data)
        for key in ("sweep_eta", "sweep_kappa"):
            if key in values:
                values[key] = tuple(float(v) for v in values[key])
        return cls(**values)


def load_settings(json_file: Optional[JsonPath] = None) -> Settings:
    """
    Load settings from JSON.

    Parameters
    ----------
    json_file : Optional[Union[str, Path]]
        Path to a JSON file. If None:
        - will try env var POLARSCALING_SETTINGS_JSON
        - otherwise loads the bundled default settings.

    Returns
    -------
    Settings
        The validated settings.
    """
    data = load_json_resource(json_file, SETTINGS_ENV_VAR, DEFAULT_SETTINGS_RESOURCE)
    settings = Settings.from_dict(data)
    logger.debug("Loaded settings: %s", settings)
    return settings


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """
    Process-wide settings, loaded once.

    Call ``get_settings.cache_clear()`` after changing the environment
    variable to force a reload.
    """
    return load_settings()
