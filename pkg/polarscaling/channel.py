"""
PolarScaling - Channel Model

This module defines the `BmsChannel` class, which represents a binary-input
memoryless output-symmetric channel: a binary erasure channel, a binary
symmetric (crossover) channel, or an explicit finite transition matrix.

It provides the channel parameters (symmetric capacity and Bhattacharyya
parameter), the single-step polar transforms W⁻ and W⁺ with likelihood-ratio
merging of equivalent outputs, and a small database of predefined channels.
"""

import json
import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Union

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import rel_entr

from .config import JsonPath, get_settings, load_json_resource
from .errors import AlphabetCapError
from .utils import binary_entropy

logger = logging.getLogger(__name__)

# Tolerance on row sums and on the output-symmetry matching
PROBABILITY_TOLERANCE = 1e-12

# Significant digits kept in likelihood-ratio keys when merging outputs
MERGE_DIGITS = 12

# Environment variable that can override the channel database location
CHANNELS_ENV_VAR = "POLARSCALING_CHANNELS_JSON"

# Relative path inside the package for the bundled default database
DEFAULT_CHANNELS_RESOURCE = "data/channels.json"


class ChannelKind(str, Enum):
    """Kinds of binary-input symmetric channels."""

    ERASURE = "erasure"
    CROSSOVER = "crossover"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class ChannelStats:
    """
    Scalar parameters of a channel.

    Parameters
    ----------
    capacity : float
        Symmetric capacity I(W) in bits, in [0, 1].
    bhattacharyya : float
        Bhattacharyya parameter Z(W), in [0, 1].
    """

    capacity: float
    bhattacharyya: float

    def __post_init__(self):
        if not -PROBABILITY_TOLERANCE <= self.capacity <= 1 + PROBABILITY_TOLERANCE:
            raise ValueError("Capacity must lie in [0, 1].")
        if not (
            -PROBABILITY_TOLERANCE <= self.bhattacharyya <= 1 + PROBABILITY_TOLERANCE
        ):
            raise ValueError("Bhattacharyya parameter must lie in [0, 1].")


@dataclass(frozen=True, eq=False)
class BmsChannel:
    """
    A binary-input memoryless output-symmetric channel.

    Use the constructors :meth:`erasure`, :meth:`crossover` and
    :meth:`explicit` rather than the raw fields.

    Parameters
    ----------
    kind : ChannelKind
        Channel family.
    parameter : Optional[float]
        Erasure probability (erasure) or crossover probability (crossover).
    matrix : Optional[numpy.ndarray]
        Transition matrix of shape (2, |Y|) with ``matrix[x, y] = W(y|x)``
        (explicit channels only).
    name : str, optional
        Human-readable channel name.

    Raises
    ------
    ValueError
        If a probability is out of range, a row of the transition matrix does
        not sum to 1, or an explicit channel is not output-symmetric.
    """

    kind: ChannelKind
    parameter: Optional[float] = None
    matrix: Optional[np.ndarray] = field(default=None, repr=False)
    name: str = "unnamed"

    def __post_init__(self):
        """
        Validate parameters upon initialization.
        """
        object.__setattr__(self, "kind", ChannelKind(self.kind))
        if self.kind is ChannelKind.EXPLICIT:
            if self.matrix is None:
                raise ValueError("Explicit channels need a transition matrix.")
            matrix = np.array(self.matrix, dtype=float)
            _validate_transition(matrix)
            matrix.setflags(write=False)
            object.__setattr__(self, "matrix", matrix)
            object.__setattr__(self, "parameter", None)
        else:
            if self.parameter is None:
                raise ValueError(f"A {self.kind.value} channel needs a probability.")
            if not 0.0 <= self.parameter <= 1.0:
                raise ValueError("Channel probabilities must lie in [0, 1].")
            object.__setattr__(self, "parameter", float(self.parameter))
            object.__setattr__(self, "matrix", None)

    @classmethod
    def erasure(cls, epsilon: float, name: Optional[str] = None) -> "BmsChannel":
        """Binary erasure channel with erasure probability `epsilon`."""
        return cls(ChannelKind.ERASURE, epsilon, name=name or f"erasure({epsilon})")

    @classmethod
    def crossover(cls, p: float, name: Optional[str] = None) -> "BmsChannel":
        """Binary symmetric channel with crossover probability `p`."""
        return cls(ChannelKind.CROSSOVER, p, name=name or f"crossover({p})")

    @classmethod
    def explicit(cls, matrix: ArrayLike, name: str = "explicit") -> "BmsChannel":
        """Channel given by a (2, |Y|) transition matrix."""
        return cls(ChannelKind.EXPLICIT, matrix=np.asarray(matrix, dtype=float), name=name)

    @cached_property
    def transition(self) -> np.ndarray:
        """
        Transition matrix of shape (2, |Y|).

        Erasure outputs are ordered (0, erased, 1); crossover outputs (0, 1).
        """
        if self.kind is ChannelKind.ERASURE:
            eps = self.parameter
            matrix = np.array([[1.0 - eps, eps, 0.0], [0.0, eps, 1.0 - eps]])
        elif self.kind is ChannelKind.CROSSOVER:
            p = self.parameter
            matrix = np.array([[1.0 - p, p], [p, 1.0 - p]])
        else:
            return self.matrix
        matrix.setflags(write=False)
        return matrix

    @property
    def output_size(self) -> int:
        """Size of the output alphabet."""
        return int(self.transition.shape[1])

    def log_likelihood_ratios(self, saturation: Optional[float] = None) -> np.ndarray:
        """
        Per-output log-likelihood ratios ln(W(y|0)/W(y|1)), clipped to
        ``±saturation`` nats (default from the settings).
        """
        limit = get_settings().llr_saturation if saturation is None else saturation
        w0, w1 = self.transition
        with np.errstate(divide="ignore", invalid="ignore"):
            llr = np.log(w0) - np.log(w1)
        # outputs that never occur carry no evidence
        llr = np.where((w0 == 0) & (w1 == 0), 0.0, llr)
        return np.clip(llr, -limit, limit)

    def transmit(self, x: ArrayLike, uniforms: ArrayLike) -> np.ndarray:
        """
        Sample channel outputs for inputs `x` from uniform variates.

        Parameters
        ----------
        x : array_like
            Input bits (any shape).
        uniforms : array_like
            Uniform variates in [0, 1) with the shape of `x`.

        Returns
        -------
        numpy.ndarray
            Output symbol indices with the shape of `x`.
        """
        bits = np.asarray(x, dtype=np.int64)
        u = np.asarray(uniforms, dtype=float)
        if bits.shape != u.shape:
            raise ValueError("Inputs and uniform variates must have the same shape.")
        cdf = np.cumsum(self.transition, axis=1)
        outputs = np.where(
            bits == 0,
            np.searchsorted(cdf[0], u, side="right"),
            np.searchsorted(cdf[1], u, side="right"),
        )
        return np.minimum(outputs, self.output_size - 1)

    def with_name(self, name: str) -> "BmsChannel":
        """Copy of the channel under another name."""
        return replace(self, name=name)

    def to_dict(self) -> Dict[str, Any]:
        """Channel spec in its JSON form."""
        if self.kind is ChannelKind.ERASURE:
            return {"kind": "erasure", "epsilon": self.parameter}
        if self.kind is ChannelKind.CROSSOVER:
            return {"kind": "crossover", "p": self.parameter}
        return {"kind": "explicit", "matrix": self.matrix.tolist()}

    @classmethod
    def from_dict(cls, spec: Mapping[str, Any], name: Optional[str] = None) -> "BmsChannel":
        """
        Build a channel from its JSON spec.

        Raises
        ------
        ValueError
            If the spec is malformed.
        """
        kind = spec.get("kind")
        if kind == "erasure":
            return cls.erasure(float(spec["epsilon"]), name=name)
        if kind == "crossover":
            return cls.crossover(float(spec["p"]), name=name)
        if kind == "explicit":
            return cls.explicit(spec["matrix"], name=name or "explicit")
        raise ValueError(
            f"Unknown channel kind '{kind}'. Expected erasure, crossover or explicit."
        )

    def __str__(self) -> str:
        """
        Return a user-friendly string representation of the channel.
        """
        stats = channel_stats(self)
        return (
            f"Channel: {self.name} ({self.kind.value}, |Y|={self.output_size})\n"
            f"Symmetric capacity I(W): {stats.capacity:.6f} bits\n"
            f"Bhattacharyya parameter Z(W): {stats.bhattacharyya:.6f}"
        )


def _validate_transition(matrix: np.ndarray) -> None:
    """
    Check shape, ranges, normalization and output symmetry of a transition matrix.

    The symmetry involution is found by greedy matching of column pairs:
    the columns (W(y|0), W(y|1)) sorted lexicographically must match the
    swapped columns (W(y|1), W(y|0)) sorted the same way.
    """
    if matrix.ndim != 2 or matrix.shape[0] != 2 or matrix.shape[1] < 1:
        raise ValueError("Transition matrix must have shape (2, |Y|).")
    if not np.all(np.isfinite(matrix)) or np.any(matrix < 0) or np.any(matrix > 1):
        raise ValueError("Transition probabilities must lie in [0, 1].")
    if np.any(np.abs(matrix.sum(axis=1) - 1.0) > PROBABILITY_TOLERANCE):
        raise ValueError("Each row of the transition matrix must sum to 1.")

    pairs = matrix.T
    swapped = pairs[:, ::-1]
    rounded = np.round(pairs, MERGE_DIGITS)
    rounded_swapped = np.round(swapped, MERGE_DIGITS)
    order = np.lexsort((rounded[:, 1], rounded[:, 0]))
    order_swapped = np.lexsort((rounded_swapped[:, 1], rounded_swapped[:, 0]))
    if np.any(
        np.abs(pairs[order] - swapped[order_swapped]) > PROBABILITY_TOLERANCE
    ):
        raise ValueError(
            "Channel is not output-symmetric: no involution π with "
            "W(y|0) = W(π(y)|1) exists."
        )


def symmetric_capacity(channel: BmsChannel) -> float:
    r"""
    Symmetric capacity of a channel in bits.

    .. math::

        I(W) = \sum_y \sum_x \frac{1}{2} W(y|x)
               \log_2 \frac{W(y|x)}{\frac{1}{2}W(y|0) + \frac{1}{2}W(y|1)}

    Erasure and crossover channels use the closed forms 1 - ε and 1 - h2(p).

    Parameters
    ----------
    channel : BmsChannel
        The channel.

    Returns
    -------
    float
        I(W) in [0, 1].
    """
    if channel.kind is ChannelKind.ERASURE:
        return 1.0 - channel.parameter
    if channel.kind is ChannelKind.CROSSOVER:
        return 1.0 - binary_entropy(channel.parameter)
    w0, w1 = channel.transition
    q = 0.5 * (w0 + w1)
    value = 0.5 * (rel_entr(w0, q).sum() + rel_entr(w1, q).sum()) / np.log(2.0)
    return float(min(max(value, 0.0), 1.0))


def bhattacharyya(channel: BmsChannel) -> float:
    r"""
    Bhattacharyya parameter :math:`Z(W) = \sum_y \sqrt{W(y|0) W(y|1)}`.

    Erasure channels give ε and crossover channels :math:`2\sqrt{p(1-p)}`.
    """
    if channel.kind is ChannelKind.ERASURE:
        return channel.parameter
    if channel.kind is ChannelKind.CROSSOVER:
        p = channel.parameter
        return 2.0 * float(np.sqrt(p * (1.0 - p)))
    w0, w1 = channel.transition
    return float(min(np.sqrt(w0 * w1).sum(), 1.0))


def channel_stats(channel: BmsChannel) -> ChannelStats:
    """Capacity and Bhattacharyya parameter of `channel`."""
    return ChannelStats(
        capacity=symmetric_capacity(channel), bhattacharyya=bhattacharyya(channel)
    )


def print_channel_stats(channel: BmsChannel) -> None:
    """
    Display the channel parameters together with those of its two transforms
    (when they stay within the alphabet cap).
    """
    print("=" * 50)
    print("Channel Parameters")
    print("=" * 50)
    print(channel)
    try:
        minus, plus = minus_transform(channel), plus_transform(channel)
    except AlphabetCapError:
        print("Transforms exceed the alphabet cap; not evaluated.")
    else:
        print(f"Z(W-) = {bhattacharyya(minus):.6f}, I(W-) = {symmetric_capacity(minus):.6f}")
        print(f"Z(W+) = {bhattacharyya(plus):.6f}, I(W+) = {symmetric_capacity(plus):.6f}")
    print("=" * 50)


def _likelihood_keys(w0: np.ndarray, w1: np.ndarray) -> np.ndarray:
    """
    Keys identifying likelihood-ratio classes: (decimal exponent, mantissa
    rounded to MERGE_DIGITS significant digits). Ratio 0 and ratio +inf get
    sentinel exponents.
    """
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(w1 > 0, w0 / np.where(w1 > 0, w1, 1.0), np.inf)
    finite = np.isfinite(ratio) & (ratio > 0)
    safe = np.where(finite, ratio, 1.0)
    exponent = np.floor(np.log10(safe))
    mantissa = np.round(safe / 10.0**exponent, MERGE_DIGITS - 1)
    carry = mantissa >= 10.0
    mantissa = np.where(carry, mantissa / 10.0, mantissa)
    exponent = np.where(carry, exponent + 1, exponent)
    exponent = np.where(ratio == 0, -1e6, np.where(np.isinf(ratio), 1e6, exponent))
    mantissa = np.where(finite, mantissa, 0.0)
    return np.column_stack([exponent, mantissa])


def _merge_outputs(w0: np.ndarray, w1: np.ndarray) -> np.ndarray:
    """
    Merge output symbols with identical likelihood ratios, summing their
    probability masses. Outputs that never occur are dropped. Merged outputs
    are ordered by increasing likelihood ratio.
    """
    used = (w0 > 0) | (w1 > 0)
    w0, w1 = w0[used], w1[used]
    _, inverse = np.unique(_likelihood_keys(w0, w1), axis=0, return_inverse=True)
    inverse = np.asarray(inverse).reshape(-1)
    size = int(inverse.max()) + 1
    return np.vstack(
        [
            np.bincount(inverse, weights=w0, minlength=size),
            np.bincount(inverse, weights=w1, minlength=size),
        ]
    )


def _from_merged(matrix: np.ndarray, name: str) -> BmsChannel:
    """Wrap a merged matrix, recognizing crossover channels."""
    if matrix.shape[1] == 2 and np.all(
        np.abs(matrix[0] - matrix[1, ::-1]) <= PROBABILITY_TOLERANCE
    ):
        p = float(min(matrix[0, 0], 1.0))
        return BmsChannel.crossover(p, name=name)
    return BmsChannel.explicit(matrix, name=name)


def _check_caps(
    channel: BmsChannel,
    product_size: int,
    alphabet_cap: Optional[int],
    product_cap: Optional[int],
) -> Tuple[int, int]:
    settings = get_settings()
    cap = settings.alphabet_cap if alphabet_cap is None else alphabet_cap
    pcap = settings.product_cap if product_cap is None else product_cap
    if channel.output_size > cap:
        raise AlphabetCapError(
            f"input alphabet of {channel.output_size} symbols exceeds the cap of {cap}"
        )
    if product_size > pcap:
        raise AlphabetCapError(
            f"product alphabet of {product_size} symbols exceeds the cap of {pcap}"
        )
    return cap, pcap


def minus_transform(
    channel: BmsChannel,
    alphabet_cap: Optional[int] = None,
    product_cap: Optional[int] = None,
) -> BmsChannel:
    r"""
    The "worse" polar transform W⁻.

    .. math::

        W^-(y_1, y_2 | u) = \frac{1}{2} \sum_{x \in \{0,1\}} W(y_1 | u \oplus x) W(y_2 | x)

    Erasure channels map to erasure(2ε - ε²) in closed form. Other channels
    are evaluated on the product alphabet, after which outputs with equal
    likelihood ratios are merged.

    Parameters
    ----------
    channel : BmsChannel
        The channel W.
    alphabet_cap : Optional[int]
        Maximum alphabet size of input and merged output (default from settings).
    product_cap : Optional[int]
        Maximum unmerged product alphabet size (default from settings).

    Returns
    -------
    BmsChannel
        The channel W⁻.

    Raises
    ------
    AlphabetCapError
        If an alphabet exceeds its cap.
    """
    if channel.kind is ChannelKind.ERASURE:
        eps = channel.parameter
        return BmsChannel.erasure(2 * eps - eps * eps, name=f"{channel.name}-")

    cap, _ = _check_caps(channel, channel.output_size**2, alphabet_cap, product_cap)
    w0, w1 = channel.transition
    minus0 = 0.5 * (np.outer(w0, w0) + np.outer(w1, w1)).ravel()
    minus1 = 0.5 * (np.outer(w1, w0) + np.outer(w0, w1)).ravel()
    merged = _merge_outputs(minus0, minus1)
    if merged.shape[1] > cap:
        raise AlphabetCapError(
            f"merged alphabet of {merged.shape[1]} symbols exceeds the cap of {cap}"
        )
    logger.debug("W- of %s: %d merged outputs", channel.name, merged.shape[1])
    return _from_merged(merged, f"{channel.name}-")


def plus_transform(
    channel: BmsChannel,
    alphabet_cap: Optional[int] = None,
    product_cap: Optional[int] = None,
) -> BmsChannel:
    r"""
    The "better" polar transform W⁺.

    .. math::

        W^+(y_1, y_2, x | u) = \frac{1}{2} W(y_1 | x \oplus u) W(y_2 | u)

    Erasure channels map to erasure(ε²) in closed form; other channels are
    evaluated on the product alphabet with likelihood-ratio merging, as in
    :func:`minus_transform`.

    Raises
    ------
    AlphabetCapError
        If an alphabet exceeds its cap.
    """
    if channel.kind is ChannelKind.ERASURE:
        eps = channel.parameter
        return BmsChannel.erasure(eps * eps, name=f"{channel.name}+")

    cap, _ = _check_caps(
        channel, 2 * channel.output_size**2, alphabet_cap, product_cap
    )
    w0, w1 = channel.transition
    # outputs (y1, y2, x) for x = 0 then x = 1
    plus0 = 0.5 * np.concatenate([np.outer(w0, w0).ravel(), np.outer(w1, w0).ravel()])
    plus1 = 0.5 * np.concatenate([np.outer(w1, w1).ravel(), np.outer(w0, w1).ravel()])
    merged = _merge_outputs(plus0, plus1)
    if merged.shape[1] > cap:
        raise AlphabetCapError(
            f"merged alphabet of {merged.shape[1]} symbols exceeds the cap of {cap}"
        )
    logger.debug("W+ of %s: %d merged outputs", channel.name, merged.shape[1])
    return _from_merged(merged, f"{channel.name}+")


def load_channels(json_file: Optional[JsonPath] = None) -> Dict[str, BmsChannel]:
    """
    Load the predefined channel database.

    Parameters
    ----------
    json_file : Optional[Union[str, Path]]
        Path to a JSON file mapping names to channel specs. If None:
        - will try env var POLARSCALING_CHANNELS_JSON
        - otherwise loads the bundled default database.

    Returns
    -------
    Dict[str, BmsChannel]
        Dictionary keyed by channel name.
    """
    data = load_json_resource(json_file, CHANNELS_ENV_VAR, DEFAULT_CHANNELS_RESOURCE)
    return {
        str(name): BmsChannel.from_dict(spec, name=str(name))
        for name, spec in data.items()
    }


def select_channel(name: str, json_file: Optional[JsonPath] = None) -> BmsChannel:
    """
    Retrieve a predefined channel by its name.

    Raises
    ------
    ValueError
        If the channel name does not exist.
    """
    channels = load_channels(json_file=json_file)
    if name not in channels:
        available = ", ".join(channels.keys())
        raise ValueError(f"Channel '{name}' not found. Available channels: {available}")
    return channels[name]


def predefined_channels(json_file: Optional[JsonPath] = None) -> Dict[str, BmsChannel]:
    """Dictionary of all predefined channels."""
    return load_channels(json_file=json_file)


def parse_channel(
    spec: Union[str, Mapping[str, Any], BmsChannel],
    json_file: Optional[JsonPath] = None,
) -> BmsChannel:
    """
    Resolve a channel from a preset name, an inline JSON spec, a path to a
    JSON spec file, or a mapping.

    Raises
    ------
    ValueError
        If the spec cannot be resolved.
    """
    if isinstance(spec, BmsChannel):
        return spec
    if isinstance(spec, Mapping):
        return BmsChannel.from_dict(spec)
    text = str(spec).strip()
    if text.startswith("{"):
        try:
            return BmsChannel.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ValueError(f"Invalid inline channel spec: {exc}") from exc
    path = Path(text)
    if path.suffix == ".json" and path.is_file():
        with path.open("r", encoding="utf-8") as f:
            return BmsChannel.from_dict(json.load(f), name=path.stem)
    return select_channel(text, json_file=json_file)
