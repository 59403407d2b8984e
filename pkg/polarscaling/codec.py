"""
PolarScaling - Codec

This module implements the polar code itself:

- the encoder x = u·G_N with G_N = P_N·G_2^{⊗n};
- code construction from a Bhattacharyya spectrum (frozen set = the N(1-R)
  least reliable sub-channels);
- the successive cancellation (SC) channel decoder;
- the randomized SC lossy source encoder;
- Monte Carlo harnesses measuring block error probability and distortion.

Decoding runs in the log-likelihood-ratio domain with saturating arithmetic;
for erasure channels a three-valued message algebra (+1 known 0, -1 known 1,
0 erased) is used instead, which is exact. Many received words are decoded
together as rows of a batch.
"""

import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple, Union

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import expit
from scipy.stats import binomtest

from .channel import BmsChannel, ChannelKind, bhattacharyya, symmetric_capacity
from .config import get_settings
from .polarization import (
    PolarSpectrum,
    SpectrumMode,
    evolve_spectrum,
    explicit_spectrum,
    export_spectrum,
    load_spectrum,
)
from .utils import bit_reversal_permutation, inverse_binary_entropy, trial_generator

logger = logging.getLogger(__name__)


def _block_level(length: int) -> int:
    if length < 1 or length & (length - 1):
        raise ValueError(f"Block length must be a power of two, got {length}.")
    return length.bit_length() - 1


def _as_bits(u: ArrayLike) -> np.ndarray:
    bits = np.array(u, dtype=np.int64)
    if bits.ndim == 0:
        raise ValueError("Expected a bit vector.")
    if np.any((bits != 0) & (bits != 1)):
        raise ValueError("Bit vectors may only contain 0 and 1.")
    return bits.astype(np.uint8)


def polar_transform(u: ArrayLike) -> np.ndarray:
    """
    u·G_2^{⊗n} over GF(2), without bit reversal, by the butterfly network.

    Accepts a single vector or a batch of shape (..., 2**n).
    """
    x = _as_bits(u)
    size = x.shape[-1]
    _block_level(size)
    flat = x.reshape(-1, size)
    half = 1
    while half < size:
        view = flat.reshape(flat.shape[0], size // (2 * half), 2, half)
        view[:, :, 0, :] ^= view[:, :, 1, :]
        half *= 2
    return flat.reshape(x.shape)


def encode(u: ArrayLike) -> np.ndarray:
    """
    Polar encoder x = u·G_N, G_N = P_N·G_2^{⊗n}, in O(N log N).

    Parameters
    ----------
    u : array_like
        Bit vector of length 2**n, or a batch of shape (..., 2**n).

    Returns
    -------
    numpy.ndarray
        Codeword bits (uint8) with the shape of `u`.

    Raises
    ------
    ValueError
        If the length is not a power of two or `u` holds non-bits.
    """
    x = polar_transform(u)
    return x[..., bit_reversal_permutation(_block_level(x.shape[-1]))]


@dataclass(frozen=True, eq=False)
class PolarCode:
    """
    A polar code of length 2**n.

    Parameters
    ----------
    n : int
        Level; blocklength N = 2**n.
    frozen_set : numpy.ndarray
        Sorted indices F of the frozen positions.
    frozen_bits : numpy.ndarray
        Bits u_F, aligned with `frozen_set`.
    z_estimates : PolarSpectrum
        Bhattacharyya estimates the code was built from.
    rate : float
        R = |F^c| / N.
    """

    n: int
    frozen_set: np.ndarray
    frozen_bits: np.ndarray
    z_estimates: PolarSpectrum
    rate: float

    def __post_init__(self):
        frozen = np.asarray(self.frozen_set, dtype=np.int64)
        bits = _as_bits(np.asarray(self.frozen_bits).reshape(-1))
        if self.z_estimates.level != self.n:
            raise ValueError("Spectrum level does not match the code level.")
        if frozen.size != np.unique(frozen).size:
            raise ValueError("Frozen indices must be distinct.")
        if frozen.size and (frozen.min() < 0 or frozen.max() >= self.length):
            raise ValueError("Frozen indices out of range.")
        if bits.shape != frozen.shape:
            raise ValueError("frozen_bits must have one bit per frozen index.")
        order = np.argsort(frozen)
        object.__setattr__(self, "frozen_set", frozen[order])
        object.__setattr__(self, "frozen_bits", bits[order])
        expected = (self.length - frozen.size) / self.length
        if not math.isclose(self.rate, expected, abs_tol=1e-12):
            raise ValueError(f"Rate {self.rate} does not match |F^c|/N = {expected}.")

    @property
    def length(self) -> int:
        """Blocklength N."""
        return 1 << self.n

    @property
    def frozen_mask(self) -> np.ndarray:
        """Boolean mask of the frozen positions."""
        mask = np.zeros(self.length, dtype=bool)
        mask[self.frozen_set] = True
        return mask

    @property
    def info_set(self) -> np.ndarray:
        """Sorted indices of the information positions F^c."""
        return np.flatnonzero(~self.frozen_mask)

    @property
    def dimension(self) -> int:
        """Number of information bits |F^c|."""
        return self.length - int(self.frozen_set.size)

    def frozen_vector(self) -> np.ndarray:
        """Length-N vector holding u_F at frozen positions and 0 elsewhere."""
        vector = np.zeros(self.length, dtype=np.uint8)
        vector[self.frozen_set] = self.frozen_bits
        return vector

    def assemble(self, info_bits: ArrayLike) -> np.ndarray:
        """Full input vector(s) u from information bits of shape (..., |F^c|)."""
        bits = _as_bits(info_bits)
        if bits.shape[-1] != self.dimension:
            raise ValueError(f"Expected {self.dimension} information bits.")
        u = np.broadcast_to(self.frozen_vector(), bits.shape[:-1] + (self.length,)).copy()
        u[..., self.info_set] = bits
        return u


def _construction_spectrum(
    channel: BmsChannel, n: int, method: SpectrumMode
) -> PolarSpectrum:
    if method is SpectrumMode.EXACT_ERASURE:
        if channel.kind is not ChannelKind.ERASURE:
            raise ValueError("The exact-erasure method needs an erasure channel.")
        return evolve_spectrum(channel.parameter, n, SpectrumMode.EXACT_ERASURE)
    if method is SpectrumMode.EXPLICIT:
        return explicit_spectrum(channel, n)
    return evolve_spectrum(bhattacharyya(channel), n, method)


def construct_code(
    channel: BmsChannel,
    n: int,
    rate: float,
    method: Union[SpectrumMode, str] = SpectrumMode.UPPER_BOUND,
    frozen_bits: Optional[ArrayLike] = None,
) -> PolarCode:
    """
    Build a polar code by freezing the N(1-R) sub-channels with the largest
    Bhattacharyya estimates, ties broken toward the lower index.

    Parameters
    ----------
    channel : BmsChannel
        Channel (or source-coding test channel).
    n : int
        Level; N = 2**n.
    rate : float
        Target rate R in [0, 1]; the information set has round(R·N) positions.
    method : SpectrumMode or str
        ``exact-erasure`` (erasure channels only), ``upper-bound``,
        ``lower-bound`` or ``explicit`` (within the alphabet cap).
    frozen_bits : Optional[array_like]
        Frozen bit values; all zeros by default.

    Raises
    ------
    ValueError
        If the rate is out of range or the method is incompatible.
    """
    if not 0.0 <= rate <= 1.0:
        raise ValueError("Rate must lie in [0, 1].")
    method = SpectrumMode(method)
    spectrum = _construction_spectrum(channel, n, method)
    length = 1 << n
    dimension = int(round(rate * length))
    order = np.lexsort((np.arange(length), -spectrum.values))
    frozen = np.sort(order[: length - dimension])
    bits = (
        np.zeros(frozen.size, dtype=np.uint8)
        if frozen_bits is None
        else np.asarray(frozen_bits, dtype=np.uint8)
    )
    logger.info(
        "Constructed code: channel=%s n=%d K=%d method=%s",
        channel.name,
        n,
        dimension,
        method.value,
    )
    return PolarCode(n, frozen, bits, spectrum, dimension / length)


def error_bound(code: PolarCode) -> float:
    """Union bound Σ_{i ∈ F^c} Z_i on the block error probability."""
    return math.fsum(code.z_estimates.values[code.info_set])


@dataclass
class DecoderState:
    """
    Decision-level state of a successive cancellation run.

    Attributes
    ----------
    log_ratios : numpy.ndarray
        ln L_N^{(i)} at every decision, shape (trials, N); ±inf for the
        erasure algebra's known values.
    decisions : numpy.ndarray
        Decided bits û, shape (trials, N).
    """

    log_ratios: np.ndarray
    decisions: np.ndarray

    @property
    def likelihood_ratios(self) -> np.ndarray:
        """Ratios L_N^{(i)} >= 0; +inf denotes certainty of 0."""
        with np.errstate(over="ignore"):
            return np.exp(self.log_ratios)


def _check_node(a: np.ndarray, b: np.ndarray, limit: float) -> np.ndarray:
    """LLR of the XOR of two bits."""
    return np.clip(np.logaddexp(0.0, a + b) - np.logaddexp(a, b), -limit, limit)


def _bit_node(a: np.ndarray, b: np.ndarray, partial: np.ndarray, limit: float) -> np.ndarray:
    return np.clip(b + (1.0 - 2.0 * partial) * a, -limit, limit)


def _erasure_check_node(a: np.ndarray, b: np.ndarray, _limit: float) -> np.ndarray:
    return a * b


def _erasure_bit_node(
    a: np.ndarray, b: np.ndarray, partial: np.ndarray, _limit: float
) -> np.ndarray:
    return np.where(b != 0, b, (1.0 - 2.0 * partial) * a)


class SuccessiveCancellation:
    """
    Single-use successive cancellation run over a batch of received words.

    Decisions follow the natural order of x = u·G_2^{⊗n}; callers apply the
    bit reversal of the channel-coding encoder beforehand.

    Parameters
    ----------
    frozen_mask : numpy.ndarray
        Boolean mask of frozen positions.
    frozen_vector : numpy.ndarray
        Frozen values (read at frozen positions only).
    erasure : bool
        Use the three-valued erasure algebra instead of LLRs.
    saturation : Optional[float]
        LLR clipping magnitude (default from settings).
    uniforms : Optional[numpy.ndarray]
        Uniform variates of shape (trials, N). When given, information bits
        are drawn from their posterior (source encoding) instead of being
        decided by the likelihood ratio.
    """

    def __init__(
        self,
        frozen_mask: np.ndarray,
        frozen_vector: np.ndarray,
        erasure: bool = False,
        saturation: Optional[float] = None,
        uniforms: Optional[np.ndarray] = None,
    ):
        self.frozen_mask = np.asarray(frozen_mask, dtype=bool)
        self.frozen_vector = np.asarray(frozen_vector, dtype=np.uint8)
        self.erasure = erasure
        self.limit = get_settings().llr_saturation if saturation is None else saturation
        self.uniforms = uniforms
        self.state: Optional[DecoderState] = None
        self._check, self._bit = (
            (_erasure_check_node, _erasure_bit_node)
            if erasure
            else (_check_node, _bit_node)
        )

    def run(self, messages: np.ndarray) -> np.ndarray:
        """
        Decide all N positions.

        Parameters
        ----------
        messages : numpy.ndarray
            Channel messages of shape (trials, N) in decoding order: LLRs, or
            values in {-1, 0, +1} for the erasure algebra.

        Returns
        -------
        numpy.ndarray
            Decisions û of shape (trials, N).
        """
        if self.state is not None:
            raise RuntimeError("A SuccessiveCancellation instance runs only once.")
        messages = np.asarray(messages, dtype=float)
        if messages.ndim != 2 or messages.shape[1] != self.frozen_mask.size:
            raise ValueError("Messages must have shape (trials, N).")
        if self.uniforms is not None and self.uniforms.shape != messages.shape:
            raise ValueError("Uniform variates must match the message shape.")
        self.state = DecoderState(
            log_ratios=np.zeros(messages.shape),
            decisions=np.zeros(messages.shape, dtype=np.uint8),
        )
        self._decode(messages, 0)
        return self.state.decisions

    def _leaf(self, message: np.ndarray, index: int) -> np.ndarray:
        state = self.state
        if self.erasure:
            state.log_ratios[:, index] = np.where(
                message > 0, np.inf, np.where(message < 0, -np.inf, 0.0)
            )
        else:
            state.log_ratios[:, index] = message
        if self.frozen_mask[index]:
            bit = np.full(message.shape, self.frozen_vector[index], dtype=np.uint8)
        elif self.uniforms is not None:
            bit = (self.uniforms[:, index] >= expit(message)).astype(np.uint8)
        else:
            # L <= 1 decides 1
            bit = (message <= 0).astype(np.uint8)
        state.decisions[:, index] = bit
        return bit

    def _decode(self, messages: np.ndarray, start: int) -> np.ndarray:
        """Decode the subtree rooted at `start`; returns its re-encoded bits."""
        length = messages.shape[1]
        if length == 1:
            return self._leaf(messages[:, 0], start)[:, None]
        half = length // 2
        a, b = messages[:, :half], messages[:, half:]
        left = self._decode(self._check(a, b, self.limit), start)
        right = self._decode(self._bit(a, b, left, self.limit), start + half)
        return np.concatenate([left ^ right, right], axis=1)


def _channel_messages(
    channel: BmsChannel, y: np.ndarray, saturation: Optional[float]
) -> Tuple[np.ndarray, bool]:
    outputs = np.asarray(y, dtype=np.int64)
    if np.any((outputs < 0) | (outputs >= channel.output_size)):
        raise ValueError("Received symbols outside the channel output alphabet.")
    llr = channel.log_likelihood_ratios(saturation)[outputs]
    if channel.kind is ChannelKind.ERASURE:
        return np.sign(llr), True
    return llr, False


def sc_decode(
    y: ArrayLike,
    code: PolarCode,
    channel: BmsChannel,
    saturation: Optional[float] = None,
) -> np.ndarray:
    """
    Successive cancellation decoding of received output symbols.

    Frozen positions are copied from the code; information positions are
    decided as û_i = 0 if L_N^{(i)} > 1 and 1 otherwise, so ties decide 1.

    Parameters
    ----------
    y : array_like
        Output symbol indices, length N or a batch of shape (trials, N).
    code : PolarCode
        The code (frozen set and bits).
    channel : BmsChannel
        The channel the codeword was sent over.
    saturation : Optional[float]
        LLR clipping magnitude.

    Returns
    -------
    numpy.ndarray
        Decisions û with the shape of `y`.
    """
    received = np.asarray(y)
    if received.shape[-1] != code.length:
        raise ValueError(f"Expected {code.length} received symbols.")
    batch = received.reshape(-1, code.length)
    messages, erasure = _channel_messages(channel, batch, saturation)
    messages = messages[:, bit_reversal_permutation(code.n)]
    decoder = SuccessiveCancellation(
        code.frozen_mask, code.frozen_vector(), erasure=erasure, saturation=saturation
    )
    return decoder.run(messages).reshape(received.shape)


def _source_encode_batch(
    ys: np.ndarray,
    code: PolarCode,
    test_channel: BmsChannel,
    uniforms: np.ndarray,
    saturation: Optional[float] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    llr = test_channel.log_likelihood_ratios(saturation)[ys]
    encoder = SuccessiveCancellation(
        code.frozen_mask, code.frozen_vector(), saturation=saturation, uniforms=uniforms
    )
    u = encoder.run(llr)
    return u, polar_transform(u)


def sc_source_encode(
    y: ArrayLike,
    code: PolarCode,
    test_channel: BmsChannel,
    seed: int = 0,
    saturation: Optional[float] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Randomized successive cancellation source encoder.

    Information positions are drawn as û_i = 0 with probability
    L_N^{(i)} / (L_N^{(i)} + 1); frozen positions are copied. The
    reconstruction is x = û·G_2^{⊗n} (no bit reversal).

    Parameters
    ----------
    y : array_like
        Source word, read as output symbols of `test_channel`; length N.
    code : PolarCode
        Code built for the test channel.
    test_channel : BmsChannel
        Test channel of the distortion-rate problem.
    seed : int
        Seed of the encoder randomness.

    Returns
    -------
    Tuple[numpy.ndarray, numpy.ndarray]
        (û, x).
    """
    ys = np.asarray(y, dtype=np.int64)
    if ys.shape != (code.length,):
        raise ValueError(f"Expected a source word of length {code.length}.")
    if np.any((ys < 0) | (ys >= test_channel.output_size)):
        raise ValueError("Source symbols outside the test channel output alphabet.")
    uniforms = trial_generator(seed, 0).random((1, code.length))
    u, x = _source_encode_batch(ys[None, :], code, test_channel, uniforms, saturation)
    return u[0], x[0]


def hamming_distance(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Per-symbol Hamming distortion."""
    return (np.asarray(x) != np.asarray(y)).astype(float)


def distortion(
    x: ArrayLike,
    y: ArrayLike,
    measure: Callable[[np.ndarray, np.ndarray], np.ndarray] = hamming_distance,
    d_max: float = 1.0,
) -> float:
    """
    Average distortion (1/N)·Σ d(x_i, y_i).

    Raises
    ------
    ValueError
        On a length mismatch or per-symbol values outside [0, d_max].
    """
    xs, ys = np.asarray(x), np.asarray(y)
    if xs.shape != ys.shape or xs.ndim != 1 or xs.size == 0:
        raise ValueError("x and y must be non-empty vectors of equal length.")
    values = np.asarray(measure(xs, ys), dtype=float)
    if np.any((values < 0) | (values > d_max)):
        raise ValueError(f"Per-symbol distortion must lie in [0, {d_max}].")
    return math.fsum(values) / values.size


@dataclass(frozen=True)
class ChannelSimulation:
    """
    Outcome of a block error simulation.

    Attributes
    ----------
    params : Dict[str, Any]
        Channel, code and seed parameters.
    trials, errors : int
        Number of blocks and of block errors.
    pe : float
        errors / trials.
    ci_low, ci_high : float
        95% Wilson interval of the block error probability.
    error_bound : float
        Union bound of the code.
    """

    params: Dict[str, Any]
    trials: int
    errors: int
    pe: float
    ci_low: float
    ci_high: float
    error_bound: float

    @property
    def stderr(self) -> float:
        """Binomial standard error of `pe`."""
        return math.sqrt(self.pe * (1.0 - self.pe) / self.trials)

    def to_dict(self) -> Dict[str, Any]:
        """Plain-JSON report."""
        return {
            "params": dict(self.params),
            "trials": self.trials,
            "errors": self.errors,
            "pe": self.pe,
            "ci_low": self.ci_low,
            "ci_high": self.ci_high,
            "error_bound": self.error_bound,
        }


def _batches(trials: int, batch_size: Optional[int]):
    size = get_settings().batch_size if batch_size is None else batch_size
    for start in range(0, trials, size):
        yield range(start, min(start + size, trials))


def simulate_channel(
    code: PolarCode,
    channel: BmsChannel,
    trials: int,
    seed: int = 0,
    batch_size: Optional[int] = None,
) -> ChannelSimulation:
    """
    Monte Carlo block error probability of SC decoding.

    Trial t draws its information bits and channel noise from
    ``trial_generator(seed, t)``, so results do not depend on the batch size.

    Raises
    ------
    ValueError
        If `trials` < 1.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1.")
    errors = 0
    for batch in _batches(trials, batch_size):
        info = np.empty((len(batch), code.dimension), dtype=np.uint8)
        noise = np.empty((len(batch), code.length))
        for row, trial in enumerate(batch):
            rng = trial_generator(seed, trial)
            info[row] = rng.integers(0, 2, code.dimension, dtype=np.uint8)
            noise[row] = rng.random(code.length)
        u = code.assemble(info)
        y = channel.transmit(encode(u), noise)
        decoded = sc_decode(y, code, channel)
        errors += int(np.any(decoded != u, axis=1).sum())
        logger.debug("Trials %d..%d: %d errors so far", batch[0], batch[-1], errors)
    interval = binomtest(errors, trials).proportion_ci(
        confidence_level=0.95, method="wilson"
    )
    result = ChannelSimulation(
        params={
            "channel": channel.to_dict(),
            "n": code.n,
            "rate": code.rate,
            "method": code.z_estimates.mode.value,
            "seed": seed,
        },
        trials=trials,
        errors=errors,
        pe=errors / trials,
        ci_low=float(interval.low),
        ci_high=float(interval.high),
        error_bound=error_bound(code),
    )
    logger.info(
        "Channel simulation: n=%d R=%g trials=%d pe=%g bound=%g",
        code.n,
        code.rate,
        trials,
        result.pe,
        result.error_bound,
    )
    return result


@dataclass(frozen=True)
class SourceSimulation:
    """
    Outcome of a lossy source coding simulation.

    Attributes
    ----------
    params : Dict[str, Any]
        Rate, design distortion, level, method and seed.
    trials : int
        Number of source words.
    d_n : float
        Average distortion D_N.
    redundancy : float
        D_N - D(R).
    analytic_check : float
        d_max · Σ_{i ∈ F} sqrt(2(1 - Z_i)).
    stderr : float
        Standard error of `d_n`.
    """

    params: Dict[str, Any]
    trials: int
    d_n: float
    redundancy: float
    analytic_check: float
    stderr: float

    def to_dict(self) -> Dict[str, Any]:
        """Plain-JSON report."""
        return {
            "params": dict(self.params),
            "trials": self.trials,
            "d_n": self.d_n,
            "redundancy": self.redundancy,
            "analytic_check": self.analytic_check,
            "stderr": self.stderr,
        }


def simulate_source(
    rate: float,
    n: int,
    trials: int,
    seed: int = 0,
    design_distortion: Optional[float] = None,
    method: Union[SpectrumMode, str] = SpectrumMode.LOWER_BOUND,
    source: str = "binary-symmetric",
    measure: str = "hamming",
    batch_size: Optional[int] = None,
) -> SourceSimulation:
    """
    Monte Carlo distortion of the randomized SC source encoder.

    The test channel is crossover(D) with D the design distortion (default
    D(R) = h2⁻¹(1 - R)); the code freezes its N(1-R) least reliable
    sub-channels with u_F = 0. The analytic check uses the code's Z
    estimates, so a lower-bound construction gives a conservative value.

    Raises
    ------
    ValueError
        For sources or distortion measures other than the binary symmetric
        source under Hamming distortion, or invalid parameters.
    """
    # pylint: disable=too-many-arguments,too-many-locals
    if source != "binary-symmetric" or measure != "hamming":
        raise ValueError(
            f"Unsupported source/distortion '{source}'/'{measure}'. "
            "Only the binary symmetric source with Hamming distortion is supported."
        )
    if not 0.0 <= rate <= 1.0:
        raise ValueError("Rate must lie in [0, 1].")
    if trials < 1:
        raise ValueError("trials must be at least 1.")
    reference = float(inverse_binary_entropy(1.0 - rate))
    design = reference if design_distortion is None else design_distortion
    if not 0.0 <= design <= 0.5:
        raise ValueError("The design distortion must lie in [0, 0.5].")
    test_channel = BmsChannel.crossover(design)
    code = construct_code(test_channel, n, rate, method)
    d_max = 1.0

    per_trial = np.empty(trials)
    for batch in _batches(trials, batch_size):
        ys = np.empty((len(batch), code.length), dtype=np.int64)
        uniforms = np.empty((len(batch), code.length))
        for row, trial in enumerate(batch):
            rng = trial_generator(seed, trial)
            ys[row] = rng.integers(0, 2, code.length)
            uniforms[row] = rng.random(code.length)
        _, x = _source_encode_batch(ys, code, test_channel, uniforms)
        per_trial[batch[0] : batch[-1] + 1] = hamming_distance(x, ys).mean(axis=1)

    d_n = math.fsum(per_trial) / trials
    stderr = float(per_trial.std(ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
    frozen_z = code.z_estimates.values[code.frozen_set]
    check = d_max * math.fsum(np.sqrt(2.0 * (1.0 - frozen_z)))
    result = SourceSimulation(
        params={
            "rate": rate,
            "design_distortion": design,
            "n": n,
            "method": SpectrumMode(method).value,
            "seed": seed,
            "test_channel_capacity": symmetric_capacity(test_channel),
        },
        trials=trials,
        d_n=d_n,
        redundancy=d_n - reference,
        analytic_check=check,
        stderr=stderr,
    )
    logger.info(
        "Source simulation: n=%d R=%g trials=%d D_N=%g check=%g",
        n,
        rate,
        trials,
        d_n,
        check,
    )
    return result


def code_document(
    code: PolarCode, spectrum_ref: Optional[str] = None
) -> Dict[str, Any]:
    """
    JSON form of a code: {n, rate, frozen_set, frozen_bits, mode} plus either
    ``z_estimates_ref`` (name of a spectrum CSV) or inline ``z_estimates``.
    """
    document: Dict[str, Any] = {
        "n": code.n,
        "rate": code.rate,
        "frozen_set": code.frozen_set.tolist(),
        "frozen_bits": code.frozen_bits.tolist(),
        "mode": code.z_estimates.mode.value,
    }
    if spectrum_ref is None:
        document["z_estimates"] = code.z_estimates.values.tolist()
    else:
        document["z_estimates_ref"] = spectrum_ref
    return document


def save_code(code: PolarCode, path: Union[str, Path]) -> Path:
    """
    Write a code to JSON with its spectrum in a CSV file next to it.

    Returns
    -------
    Path
        The spectrum file.
    """
    path = Path(path)
    spectrum_path = path.with_name(path.stem + ".spectrum.csv")
    export_spectrum(code.z_estimates, spectrum_path)
    with path.open("w", encoding="utf-8") as f:
        json.dump(code_document(code, spectrum_path.name), f, indent=2, sort_keys=True)
    return spectrum_path


def load_code(path: Union[str, Path]) -> PolarCode:
    """
    Read a code written by :func:`save_code` (or by the ``construct``
    command). A spectrum reference is resolved relative to the code file.

    Raises
    ------
    ValueError
        If required keys are missing.
    """
    path = Path(path)
    with path.open("r", encoding="utf-8") as f:
        document = json.load(f)
    missing = {"n", "frozen_set", "frozen_bits"} - set(document)
    if missing:
        raise ValueError(f"Code file lacks keys: {', '.join(sorted(missing))}")
    n = int(document["n"])
    mode = document.get("mode", SpectrumMode.UPPER_BOUND.value)
    if "z_estimates_ref" in document:
        spectrum = load_spectrum(path.parent / document["z_estimates_ref"], mode)
    elif "z_estimates" in document:
        spectrum = PolarSpectrum(
            level=n, values=np.asarray(document["z_estimates"], dtype=float), mode=mode
        )
    else:
        raise ValueError("Code file lacks z_estimates or z_estimates_ref.")
    frozen = np.asarray(document["frozen_set"], dtype=np.int64)
    return PolarCode(
        n=n,
        frozen_set=frozen,
        frozen_bits=np.asarray(document["frozen_bits"], dtype=np.uint8),
        z_estimates=spectrum,
        rate=((1 << n) - frozen.size) / (1 << n),
    )


def print_simulation_report(
    result: Union[ChannelSimulation, SourceSimulation]
) -> None:
    """
    Display a simulation report.
    """
    print("=" * 50)
    if isinstance(result, ChannelSimulation):
        print("Channel Coding Simulation")
        print("=" * 50)
        print(f"Trials: {result.trials}")
        print(f"Block errors: {result.errors}")
        print(f"Pe: {result.pe:.6g} (95% CI {result.ci_low:.6g} - {result.ci_high:.6g})")
        print(f"Union bound: {result.error_bound:.6g}")
    else:
        print("Source Coding Simulation")
        print("=" * 50)
        print(f"Trials: {result.trials}")
        print(f"D_N: {result.d_n:.6f} (stderr {result.stderr:.2g})")
        print(f"Redundancy D_N - D(R): {result.redundancy:.6f}")
        print(f"Analytic check: {result.analytic_check:.6f}")
    print("=" * 50)
