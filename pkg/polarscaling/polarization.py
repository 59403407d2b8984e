"""
PolarScaling - Polarization Process

This module evolves the Bhattacharyya process of channel polarization: exact
spectra for erasure channels, spectra that track the upper or lower envelope of
the minus transform for general channels, exact spectra of explicit channels at
small levels, Monte Carlo trajectories, and the fraction of sub-channels that
have not yet polarized.

Spectra are flat arrays in branch-lexicographic order: the binary expansion of
index i (most significant bit first) lists the branches taken from the root,
0 for '-' and 1 for '+'. This is the sub-channel order seen by a successive
cancellation decoder for x = u·P_N·G_2^{⊗n}.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from .channel import BmsChannel, ChannelKind, bhattacharyya, minus_transform, plus_transform
from .config import get_settings
from .errors import AlphabetCapError, ResourceCapError
from .utils import trial_generator

logger = logging.getLogger(__name__)


class SpectrumMode(str, Enum):
    """How the minus branch of the Bhattacharyya recursion is evaluated."""

    EXACT_ERASURE = "exact-erasure"
    UPPER_BOUND = "upper-bound"
    LOWER_BOUND = "lower-bound"
    EXPLICIT = "explicit"


@dataclass(frozen=True, eq=False)
class PolarSpectrum:
    """
    Bhattacharyya values of all 2**level sub-channels.

    Parameters
    ----------
    level : int
        Level n (blocklength N = 2**n).
    values : numpy.ndarray
        The 2**n values in [0, 1], in branch-lexicographic order.
    mode : SpectrumMode
        How the values were obtained.
    """

    level: int
    values: np.ndarray = field(repr=False)
    mode: SpectrumMode

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if self.level < 0 or values.shape != (1 << self.level,):
            raise ValueError("A level-n spectrum must hold exactly 2**n values.")
        if np.any((values < 0) | (values > 1)):
            raise ValueError("Bhattacharyya values must lie in [0, 1].")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "mode", SpectrumMode(self.mode))

    def __len__(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True, eq=False)
class Trajectory:
    """
    One path of the polarization process.

    Parameters
    ----------
    branches : numpy.ndarray
        Branch bits B_1..B_n (1 selects the '+' transform).
    z_path : numpy.ndarray
        Bhattacharyya values Z_0..Z_n.
    """

    branches: np.ndarray
    z_path: np.ndarray

    def __post_init__(self):
        if self.z_path.shape[0] != self.branches.shape[0] + 1:
            raise ValueError("A trajectory of n branches carries n + 1 values.")


def plus_z(z: np.ndarray) -> np.ndarray:
    """Bhattacharyya value after a '+' branch: z²."""
    return z * z


def minus_z(z: np.ndarray, mode: Union[SpectrumMode, str]) -> np.ndarray:
    """
    Bhattacharyya value after a '-' branch.

    Upper-bound and exact-erasure modes use 2z - z²; lower-bound mode uses
    z·sqrt(2 - z²).
    """
    mode = SpectrumMode(mode)
    if mode is SpectrumMode.LOWER_BOUND:
        return z * np.sqrt(2.0 - z * z)
    if mode is SpectrumMode.EXPLICIT:
        raise ValueError("Explicit spectra are built with explicit_spectrum().")
    return 2.0 * z - z * z


def _check_level(n: int, max_level: Optional[int]) -> None:
    limit = get_settings().spectrum_max_level if max_level is None else max_level
    if n < 0:
        raise ValueError("Level n must be non-negative.")
    if n > limit:
        raise ResourceCapError(
            f"Level {n} exceeds the spectrum cap of {limit} "
            f"(2^{n} values); sample trajectories instead."
        )


def _check_z(z0: float) -> None:
    if not 0.0 <= z0 <= 1.0:
        raise ValueError("Bhattacharyya value z0 must lie in [0, 1].")


def evolve_spectrum(
    z0: float,
    n: int,
    mode: Union[SpectrumMode, str] = SpectrumMode.EXACT_ERASURE,
    max_level: Optional[int] = None,
) -> PolarSpectrum:
    """
    Evolve a Bhattacharyya value through n levels of polarization.

    Every level maps each value to its '-' child (index 2i) and '+' child
    (index 2i + 1).

    Parameters
    ----------
    z0 : float
        Bhattacharyya parameter of the underlying channel, in [0, 1].
    n : int
        Number of levels.
    mode : SpectrumMode or str
        ``exact-erasure``, ``upper-bound`` or ``lower-bound``.
    max_level : Optional[int]
        Override of the level cap (default from settings).

    Returns
    -------
    PolarSpectrum
        The 2**n values.

    Raises
    ------
    ResourceCapError
        If n exceeds the level cap.
    """
    _check_z(z0)
    _check_level(n, max_level)
    mode = SpectrumMode(mode)
    values = np.array([z0], dtype=float)
    for _ in range(n):
        children = np.empty(2 * values.shape[0])
        children[0::2] = minus_z(values, mode)
        children[1::2] = plus_z(values)
        values = np.clip(children, 0.0, 1.0)
    logger.debug("Evolved z0=%g to level %d in %s mode", z0, n, mode.value)
    return PolarSpectrum(level=n, values=values, mode=mode)


def sample_trajectories(
    z0: float,
    n: int,
    mode: Union[SpectrumMode, str],
    seed: int,
    count: int,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Sample `count` trajectories at once.

    Row t draws its fair-coin branches from the stream of ``(seed, t)``, so it
    equals ``sample_trajectory(z0, n, mode, seed, index=t)``.

    Returns
    -------
    Tuple[numpy.ndarray, numpy.ndarray]
        Branch bits of shape (count, n) and values of shape (count, n + 1).
    """
    _check_z(z0)
    if n < 0 or count < 1:
        raise ValueError("Need n >= 0 and at least one trajectory.")
    mode = SpectrumMode(mode)
    branches = np.stack(
        [trial_generator(seed, t).integers(0, 2, size=n) for t in range(count)]
    ).astype(np.int8)
    z_path = np.empty((count, n + 1))
    z_path[:, 0] = z0
    for step in range(n):
        z = z_path[:, step]
        z_path[:, step + 1] = np.clip(
            np.where(branches[:, step] == 1, plus_z(z), minus_z(z, mode)), 0.0, 1.0
        )
    return branches, z_path


def sample_trajectory(
    z0: float,
    n: int,
    mode: Union[SpectrumMode, str] = SpectrumMode.UPPER_BOUND,
    seed: int = 0,
    index: int = 0,
) -> Trajectory:
    """
    Sample one trajectory of the polarization process.

    Parameters
    ----------
    z0 : float
        Starting Bhattacharyya value.
    n : int
        Number of steps.
    mode : SpectrumMode or str
        Recursion used on '-' branches.
    seed : int
        Seed of the pseudorandom stream.
    index : int
        Trajectory index within the seeded experiment.

    Returns
    -------
    Trajectory
        Branches and values; identical for identical (seed, index).
    """
    _check_z(z0)
    mode = SpectrumMode(mode)
    branches = trial_generator(seed, index).integers(0, 2, size=n).astype(np.int8)
    z_path = np.empty(n + 1)
    z_path[0] = z0
    for step in range(n):
        z = z_path[step]
        z_path[step + 1] = min(
            max(float(plus_z(z) if branches[step] else minus_z(z, mode)), 0.0), 1.0
        )
    return Trajectory(branches=branches, z_path=z_path)


def _check_delta(delta: float) -> None:
    if not 0.0 < delta < 0.5:
        raise ValueError("delta must lie in (0, 0.5).")


def fraction_unpolarized(spectrum: PolarSpectrum, delta: float) -> float:
    """
    Fraction of sub-channels with δ < Z < 1 - δ, i.e. Pr(Y_n > δ) for
    Y_n = min(Z_n, 1 - Z_n).
    """
    _check_delta(delta)
    values = spectrum.values
    return float(np.count_nonzero((values > delta) & (values < 1.0 - delta))) / len(
        spectrum
    )


def split_fractions(spectrum: PolarSpectrum, delta: float) -> Tuple[float, float]:
    """
    Fractions of good (Z <= δ) and bad (Z >= 1 - δ) sub-channels.
    """
    _check_delta(delta)
    values = spectrum.values
    size = len(spectrum)
    good = np.count_nonzero(values <= delta) / size
    bad = np.count_nonzero(values >= 1.0 - delta) / size
    return float(good), float(bad)


def persistent_good_fraction(
    z0: float,
    n: int,
    m0: int,
    delta: float,
    mode: Union[SpectrumMode, str] = SpectrumMode.EXACT_ERASURE,
) -> float:
    """
    Fraction of level-n sub-channels whose path satisfies Z_m <= δ for every
    m0 <= m <= n.
    """
    _check_z(z0)
    _check_level(n, None)
    if not 0 <= m0 <= n:
        raise ValueError("Need 0 <= m0 <= n.")
    mode = SpectrumMode(mode)
    values = np.array([z0], dtype=float)
    good = np.ones(1, dtype=bool)
    for level in range(1, n + 1):
        children = np.empty(2 * values.shape[0])
        children[0::2] = minus_z(values, mode)
        children[1::2] = plus_z(values)
        values = np.clip(children, 0.0, 1.0)
        good = np.repeat(good, 2)
        if level >= m0:
            good &= values <= delta
    if m0 == 0:
        good &= z0 <= delta
    return float(np.count_nonzero(good)) / good.shape[0]


def summed_band_mass(
    z0: float,
    m0: int,
    n: int,
    delta: float,
    mode: Union[SpectrumMode, str] = SpectrumMode.EXACT_ERASURE,
) -> float:
    """
    Sum over m0 <= m <= n of the unpolarized fraction Pr(Y_m > δ).
    """
    _check_delta(delta)
    if not 0 <= m0 <= n:
        raise ValueError("Need 0 <= m0 <= n.")
    return float(
        sum(
            fraction_unpolarized(evolve_spectrum(z0, m, mode), delta)
            for m in range(m0, n + 1)
        )
    )


def fit_decay_rate(
    z0: float,
    levels: Sequence[int],
    delta: float,
    mode: Union[SpectrumMode, str] = SpectrumMode.EXACT_ERASURE,
) -> float:
    """
    Least-squares slope of log2 Pr(Y_n > δ) against n.

    Levels at which every sub-channel has polarized are skipped.

    Raises
    ------
    ValueError
        If fewer than two levels have a positive unpolarized fraction.
    """
    points = []
    for n in levels:
        fraction = fraction_unpolarized(evolve_spectrum(z0, n, mode), delta)
        if fraction > 0:
            points.append((n, np.log2(fraction)))
    if len(points) < 2:
        raise ValueError("Need at least two levels with unpolarized sub-channels.")
    ns, logs = np.array(points).T
    slope, _ = np.polyfit(ns, logs, 1)
    return float(slope)


def explicit_spectrum(
    channel: BmsChannel,
    n: int,
    alphabet_cap: Optional[int] = None,
    product_cap: Optional[int] = None,
) -> PolarSpectrum:
    """
    Exact Bhattacharyya values of all sub-channels of a channel, built by
    repeated explicit transforms.

    Raises
    ------
    AlphabetCapError
        If a transform exceeds the alphabet cap; the message names the
        sub-channel index (at the level where the cap was hit).
    """
    _check_level(n, None)
    level_channels: List[BmsChannel] = [channel]
    for level in range(n):
        next_channels: List[BmsChannel] = []
        for index, sub in enumerate(level_channels):
            try:
                next_channels.append(minus_transform(sub, alphabet_cap, product_cap))
                next_channels.append(plus_transform(sub, alphabet_cap, product_cap))
            except AlphabetCapError as exc:
                raise AlphabetCapError(
                    f"level {level + 1} transform of sub-channel {index} failed: "
                    f"{exc.detail}",
                    index=len(next_channels),
                ) from exc
        level_channels = next_channels
        logger.debug(
            "Level %d: largest alphabet %d",
            level + 1,
            max(c.output_size for c in level_channels),
        )
    mode = (
        SpectrumMode.EXACT_ERASURE
        if channel.kind is ChannelKind.ERASURE
        else SpectrumMode.EXPLICIT
    )
    values = np.array([bhattacharyya(c) for c in level_channels])
    return PolarSpectrum(level=n, values=np.clip(values, 0.0, 1.0), mode=mode)


def spectrum_frame(spectrum: PolarSpectrum) -> pd.DataFrame:
    """Spectrum as a DataFrame with columns (index, z_value)."""
    return pd.DataFrame(
        {"index": np.arange(len(spectrum)), "z_value": spectrum.values}
    )


def trajectory_frame(trajectory: Trajectory) -> pd.DataFrame:
    """
    Trajectory as a DataFrame with columns (step, branch, z). Step 0 carries
    the starting value and no branch (-1).
    """
    branches = np.concatenate([[-1], trajectory.branches.astype(np.int64)])
    return pd.DataFrame(
        {
            "step": np.arange(trajectory.z_path.shape[0]),
            "branch": branches,
            "z": trajectory.z_path,
        }
    )


def export_spectrum(spectrum: PolarSpectrum, path: Union[str, Path]) -> None:
    """Write a spectrum to CSV (index, z_value)."""
    spectrum_frame(spectrum).to_csv(path, index=False, float_format="%.17g")


def export_trajectory(trajectory: Trajectory, path: Union[str, Path]) -> None:
    """Write a trajectory to CSV (step, branch, z)."""
    trajectory_frame(trajectory).to_csv(path, index=False, float_format="%.17g")


def load_spectrum(
    path: Union[str, Path], mode: Union[SpectrumMode, str]
) -> PolarSpectrum:
    """Read a spectrum written by :func:`export_spectrum`."""
    frame = pd.read_csv(path, comment="#").sort_values("index")
    values = frame["z_value"].to_numpy(dtype=float)
    level = int(values.shape[0]).bit_length() - 1
    return PolarSpectrum(level=level, values=values, mode=mode)
