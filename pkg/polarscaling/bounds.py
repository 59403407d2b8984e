"""
PolarScaling - Blocklength Bounds

This module evaluates the explicit constant chains that turn a decay rate ρ of
the unpolarized fraction into blocklength guarantees:

- the tail bound Pr(Y_n > δ) <= (α₁ / 2δ) · 2^{-ρn};
- the channel-coding blocklength needed for a gap Δ to capacity and a block
  error probability Pe;
- the source-coding blocklength needed for a redundancy target.

Both blocklength bounds are parameterized by (η, κ); sweeps over a grid of
those parameters report the smallest blocklength and the parameters reaching
it. Quantities that underflow double precision (δ can be 2^-10000) are carried
as base-2 logarithms.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, Optional, Sequence, Tuple

import numpy as np
import sympy
from scipy.optimize import brentq

from .channel import BmsChannel, ChannelKind, bhattacharyya, symmetric_capacity
from .config import get_settings
from .errors import TargetUnattainableError
from .exponent import ExponentResult, GridFunction, Variant, make_f0, make_g0
from .polarization import (
    SpectrumMode,
    persistent_good_fraction,
    sample_trajectories,
    summed_band_mass,
)
from .utils import binary_entropy, inverse_binary_entropy

logger = logging.getLogger(__name__)

# Largest log2 N considered by the source-coding search
MAX_LOG2_N = 1e7

# Rates of the z^0.7 (1 - z)^0.6 base function at k = 1 and k = 50
REFERENCE_RHO_1 = 0.1498
REFERENCE_RHO_50 = 0.2097


def _check_params(eta: float, kappa: float, rho: float) -> None:
    if not 0.0 < eta < 0.5:
        raise ValueError("eta must lie in (0, 0.5).")
    if kappa <= 0:
        raise ValueError("kappa must be positive.")
    if not 0.0 < rho < 1.0:
        raise ValueError("rho must lie in (0, 1).")


def log2_delta_of(eta: float, kappa: float, rho: float) -> float:
    r"""
    Base-2 logarithm of the threshold δ.

    .. math::

        \log_2 \delta = -\frac{1.5 + \eta + (1 - h_2(0.5 - \eta)) / \rho}{0.5 - \eta} - \kappa
    """
    _check_params(eta, kappa, rho)
    capacity_gap = 1.0 - binary_entropy(0.5 - eta)
    return -(1.5 + eta + capacity_gap / rho) / (0.5 - eta) - kappa


def delta_of(eta: float, kappa: float, rho: float) -> float:
    """
    Threshold δ = 2^{log2_delta_of(η, κ, ρ)}; always below 1/3. May underflow
    to 0.0 for η close to 0.5, use :func:`log2_delta_of` there.
    """
    log2_delta = log2_delta_of(eta, kappa, rho)
    assert log2_delta < -np.log2(3.0), "delta must stay below 1/3"
    return float(2.0**log2_delta)


def decay_alpha_of(eta: float, rho: float) -> float:
    r"""
    Decay exponent of the gap to capacity,
    :math:`\left(\frac{1}{1 - h_2(0.5 - \eta)} + \frac{1}{\rho}\right)^{-1}`.
    """
    _check_params(eta, 1.0, rho)
    return 1.0 / (1.0 / (1.0 - binary_entropy(0.5 - eta)) + 1.0 / rho)


def scaling_mu(rho: float) -> float:
    """Scaling exponent μ = 1 + 1/ρ implied by the rate ρ."""
    if rho <= 0:
        raise ValueError("rho must be positive.")
    return 1.0 + 1.0 / rho


@dataclass(frozen=True)
class BoundParams:
    """
    Constant chain of the blocklength bounds.

    Parameters
    ----------
    eta : float
        η in (0, 0.5).
    kappa : float
        κ > 0.
    rho : float
        Decay rate ρ in (0, 1), bits per level.
    alpha1 : float
        Prefactor α₁ >= 0 of the tail bound.

    Attributes
    ----------
    log2_delta : float
        log2 δ.
    delta : float
        δ (possibly 0.0 after underflow).
    decay_alpha : float
        (1/(1 - h2(0.5 - η)) + 1/ρ)^-1.
    m0_fraction : float
        m₀/n = (1 - h2(0.5 - η)) / (1 - h2(0.5 - η) + ρ).
    """

    eta: float
    kappa: float
    rho: float
    alpha1: float
    log2_delta: float = field(init=False)
    delta: float = field(init=False)
    decay_alpha: float = field(init=False)
    m0_fraction: float = field(init=False)

    def __post_init__(self):
        _check_params(self.eta, self.kappa, self.rho)
        if self.alpha1 < 0:
            raise ValueError("alpha1 must be non-negative.")
        log2_delta = log2_delta_of(self.eta, self.kappa, self.rho)
        assert log2_delta < -np.log2(3.0), "delta must stay below 1/3"
        capacity_gap = 1.0 - binary_entropy(0.5 - self.eta)
        object.__setattr__(self, "log2_delta", log2_delta)
        object.__setattr__(self, "delta", float(2.0**log2_delta))
        object.__setattr__(self, "decay_alpha", decay_alpha_of(self.eta, self.rho))
        object.__setattr__(
            self, "m0_fraction", capacity_gap / (capacity_gap + self.rho)
        )

    @property
    def capacity_gap(self) -> float:
        """1 - h2(0.5 - η)."""
        return 1.0 - binary_entropy(0.5 - self.eta)

    @property
    def pe_exponent(self) -> float:
        """κρ(0.5 - η) / (1 - h2(0.5 - η) + ρ), the decay exponent of Pe in N."""
        return (
            self.kappa * self.rho * (0.5 - self.eta) / (self.capacity_gap + self.rho)
        )

    def to_dict(self) -> Dict[str, float]:
        """Plain-JSON representation."""
        return {
            "eta": self.eta,
            "kappa": self.kappa,
            "rho": self.rho,
            "alpha1": self.alpha1,
            "log2_delta": self.log2_delta,
            "delta": self.delta,
            "decay_alpha": self.decay_alpha,
            "m0_fraction": self.m0_fraction,
        }


def alpha1_from_exponents(
    base_ratio: float, l_1: float, l_k: float, k: int
) -> float:
    """
    α₁ = base_ratio · (L_1 / L_k^{1/k})^{k-1}, where base_ratio is
    f_0(Z(W)) / f_0(0.5).
    """
    if k < 1 or l_1 <= 0 or l_k <= 0 or base_ratio < 0:
        raise ValueError("Need k >= 1, positive L values and a non-negative ratio.")
    return float(base_ratio * (l_1 / l_k ** (1.0 / k)) ** (k - 1))


def alpha1_constant(
    channel: BmsChannel,
    k: int,
    results: Sequence[ExponentResult],
    f0: Optional[GridFunction] = None,
    alpha: float = 0.7,
    beta: float = 0.6,
) -> float:
    """
    Prefactor α₁ of the tail bound for a channel.

    Parameters
    ----------
    channel : BmsChannel
        The channel W; Z(W) is used for the Bhattacharyya variant and I(W)
        for the mutual-information variant.
    k : int
        Iteration whose L_k sets the rate.
    results : Sequence[ExponentResult]
        Exponent results containing k = 1 and `k`.
    f0 : Optional[GridFunction]
        Base function; defaults to the one of the results' variant with
        exponents `alpha`, `beta`.

    Returns
    -------
    float
        α₁ = (f_0(Z(W)) / f_0(0.5)) · (L_1 / L_k^{1/k})^{k-1}.
    """
    by_k = {r.k: r for r in results}
    if 1 not in by_k or k not in by_k:
        raise ValueError(f"Exponent results for k=1 and k={k} are required.")
    variant = by_k[k].variant
    if f0 is None:
        f0 = (
            make_f0(alpha, beta, 1 << 10)
            if variant is Variant.BHATTACHARYYA
            else make_g0(1 << 10)
        )
    point = (
        bhattacharyya(channel)
        if variant is Variant.BHATTACHARYYA
        else symmetric_capacity(channel)
    )
    ratio = float(f0.base(point) / f0.base(0.5))
    return alpha1_from_exponents(ratio, by_k[1].L_k, by_k[k].L_k, k)


def reference_alpha1(z: float) -> float:
    """
    α₁ for a channel with Bhattacharyya parameter `z`, from the rates
    ρ₁ = 0.1498 and ρ₅₀ = 0.2097 of the z^0.7 (1 - z)^0.6 base function.
    """
    if not 0.0 <= z <= 1.0:
        raise ValueError("z must lie in [0, 1].")
    ratio = z**0.7 * (1.0 - z) ** 0.6 / 0.5**1.3
    return alpha1_from_exponents(
        ratio, 2.0**-REFERENCE_RHO_1, 2.0 ** (-REFERENCE_RHO_50 * 50), 50
    )


def tail_probability_bound(alpha1: float, delta: float, rho: float, n: int) -> float:
    """Tail bound Pr(Y_n > δ) <= (α₁ / 2δ) · 2^{-ρn}."""
    if delta <= 0:
        raise ValueError("delta must be positive.")
    return float(alpha1 / (2.0 * delta) * 2.0 ** (-rho * n))


def _log2_offset(params: BoundParams, factor: float) -> float:
    """log2(1 + α₁ / (factor · δ · (1 - 2^-ρ))), computed without forming δ."""
    if params.alpha1 == 0:
        return 0.0
    exponent = (
        np.log2(params.alpha1)
        - np.log2(factor)
        - params.log2_delta
        - np.log2(1.0 - 2.0**-params.rho)
    )
    return float(np.logaddexp2(0.0, exponent))


def channel_bound_terms(
    gap: float, pe: float, params: BoundParams
) -> Tuple[float, float]:
    """
    The two lower bounds on log2 N of the channel-coding guarantee.

    Returns
    -------
    Tuple[float, float]
        (rate term, error term):
        [log2(1 + α₁/(2δ(1 - 2^-ρ))) - log2 Δ] · (1/(1 - h2(0.5 - η)) + 1/ρ) and
        [log2 δ - log2 Pe] · (1 - h2(0.5 - η) + ρ) / (κρ(0.5 - η)).
    """
    if not 0.0 < gap < 1.0:
        raise ValueError("The gap to capacity must lie in (0, 1).")
    if not 0.0 < pe < 1.0:
        raise ValueError("The error probability must lie in (0, 1).")
    rate_term = (_log2_offset(params, 2.0) - np.log2(gap)) / params.decay_alpha
    error_term = (params.log2_delta - np.log2(pe)) / params.pe_exponent
    return float(rate_term), float(error_term)


def required_blocklength_channel(gap: float, pe: float, params: BoundParams) -> float:
    """
    log2 N sufficient for rate I(W) - Δ with block error probability at most
    Pe: the larger of the two :func:`channel_bound_terms`.
    """
    return max(channel_bound_terms(gap, pe, params))


def rate_condition_gap(log2_n: float, params: BoundParams) -> float:
    """Gap (1 + α₁/(2δ(1 - 2^-ρ))) · N^{-decay_alpha} reachable at log2 N."""
    return float(
        2.0 ** (_log2_offset(params, 2.0) - params.decay_alpha * log2_n)
    )


def union_error_bound(rate: float, log2_n: float, params: BoundParams) -> float:
    """Block error bound Rδ · N^{-κρ(0.5 - η)/(1 - h2(0.5 - η) + ρ)}."""
    if not 0.0 <= rate <= 1.0:
        raise ValueError("Rate must lie in [0, 1].")
    if rate == 0:
        return 0.0
    return float(
        2.0 ** (np.log2(rate) + params.log2_delta - params.pe_exponent * log2_n)
    )


@dataclass(frozen=True)
class BlocklengthReport:
    """
    Outcome of a blocklength evaluation.

    Parameters
    ----------
    kind : str
        ``channel`` or ``source``.
    log2_n : float
        Required log2 N.
    params : BoundParams
        The constant chain reaching `log2_n`.
    terms : Tuple[float, float]
        The two bound terms at the reported point (log2 N lower bounds for
        channel coding; distortion contributions for source coding).
    inputs : Dict[str, Any]
        The target quantities the bound was evaluated for.
    """

    kind: str
    log2_n: float
    params: BoundParams
    terms: Tuple[float, float]
    inputs: Dict[str, Any] = field(default_factory=dict)

    @property
    def mu(self) -> float:
        """Scaling exponent 1 + 1/ρ."""
        return scaling_mu(self.params.rho)

    @property
    def effective_mu(self) -> float:
        """Blocklength growth per unit of -log2(target) at this η: 1 / decay_alpha."""
        return 1.0 / self.params.decay_alpha

    def to_dict(self) -> Dict[str, Any]:
        """Plain-JSON representation."""
        return {
            "kind": self.kind,
            "inputs": dict(self.inputs),
            "params": self.params.to_dict(),
            "terms": list(self.terms),
            "log2_n": self.log2_n,
            "mu": self.mu,
            "effective_mu": self.effective_mu,
        }


def _sweep_pairs(
    etas: Optional[Iterable[float]], kappas: Optional[Iterable[float]]
) -> Sequence[Tuple[float, float]]:
    settings = get_settings()
    etas = settings.sweep_eta if etas is None else tuple(etas)
    kappas = settings.sweep_kappa if kappas is None else tuple(kappas)
    return sorted((float(e), float(k)) for e in etas for k in kappas)


def sweep_channel_blocklength(
    gap: float,
    pe: float,
    rho: float,
    alpha1: float,
    etas: Optional[Iterable[float]] = None,
    kappas: Optional[Iterable[float]] = None,
) -> BlocklengthReport:
    """
    Smallest channel-coding log2 N over an (η, κ) grid.

    Ties are broken by lexicographic (η, κ).
    """
    best: Optional[BlocklengthReport] = None
    for eta, kappa in _sweep_pairs(etas, kappas):
        params = BoundParams(eta=eta, kappa=kappa, rho=rho, alpha1=alpha1)
        terms = channel_bound_terms(gap, pe, params)
        log2_n = max(terms)
        if best is None or log2_n < best.log2_n:
            best = BlocklengthReport(
                "channel", log2_n, params, terms, {"gap": gap, "pe": pe}
            )
    assert best is not None, "empty parameter sweep"
    logger.info(
        "Channel sweep: gap=%g pe=%g -> log2 N=%.4f at eta=%g kappa=%g",
        gap,
        pe,
        best.log2_n,
        best.params.eta,
        best.params.kappa,
    )
    return best


@dataclass(frozen=True)
class DistortionRate:
    """
    A convex decreasing distortion-rate function with its derivative.

    Parameters
    ----------
    name : str
        Source and distortion measure.
    value : Callable[[float], float]
        R -> D(R).
    derivative : Callable[[float], float]
        R -> D'(R).
    d_max : float
        Largest per-symbol distortion.
    """

    name: str
    value: Callable[[float], float]
    derivative: Callable[[float], float]
    d_max: float = 1.0


def binary_hamming_distortion_rate() -> DistortionRate:
    """
    Distortion-rate function of the binary symmetric source under Hamming
    distortion: D(R) = h2⁻¹(1 - R).

    The derivative follows from R(D) = 1 - h2(D) by implicit
    differentiation, D'(R) = 1 / R'(D(R)) = -1 / h2'(D(R)).
    """
    d = sympy.symbols("D", positive=True)
    rate_of_distortion = 1 + d * sympy.log(d, 2) + (1 - d) * sympy.log(1 - d, 2)
    rate_slope = sympy.lambdify(d, sympy.diff(rate_of_distortion, d), "numpy")

    def value(rate: float) -> float:
        if not 0.0 <= rate <= 1.0:
            raise ValueError("Rate must lie in [0, 1].")
        return float(inverse_binary_entropy(1.0 - rate))

    def derivative(rate: float) -> float:
        with np.errstate(divide="ignore"):
            return float(np.divide(1.0, rate_slope(value(rate))))

    return DistortionRate("binary symmetric source, Hamming", value, derivative, 1.0)


def source_bound_terms(
    log2_n: float,
    rate: float,
    d_max: float,
    distortion_rate: DistortionRate,
    params: BoundParams,
) -> Tuple[float, float]:
    """
    log2 of the two redundancy contributions at blocklength 2^log2_n:

    d_max · sqrt(2δ) · (1 - R) · N^{1/2 - κρ(0.5 - η)/(2(1 - h2(0.5 - η) + ρ))} and
    (1 + α₁/(δ(1 - 2^-ρ))) · N^{-decay_alpha} · |D'(R/2)|.
    """
    first = (
        np.log2(d_max)
        + 0.5 * (1.0 + params.log2_delta)
        + np.log2(1.0 - rate)
        + (0.5 - 0.5 * params.pe_exponent) * log2_n
    )
    slope = abs(distortion_rate.derivative(rate / 2.0))
    second = (
        _log2_offset(params, 1.0) - params.decay_alpha * log2_n + np.log2(slope)
    )
    return float(first), float(second)


def required_blocklength_source(
    target: float,
    rate: float,
    d_max: float = 1.0,
    distortion_rate: Optional[DistortionRate] = None,
    rho: float = 0.2097,
    alpha1: float = 1.0,
    etas: Optional[Iterable[float]] = None,
    kappas: Optional[Iterable[float]] = None,
) -> BlocklengthReport:
    """
    Smallest log2 N over an (η, κ) grid for which the redundancy bound is at
    most `target`.

    For each pair with a decreasing first term, the bound is monotone in N
    and the crossing point is found by root bracketing. Pairs whose first
    term does not decay (pe_exponent <= 1) are skipped with a debug log even
    when they meet the target at small N, since their bound grows again
    with N; they still count toward the best bound reported by
    TargetUnattainableError.

    The blocklength is also raised until the capacity of the test channel
    provably exceeds R/2, which licenses |D'(R/2)| as the derivative bound.

    Parameters
    ----------
    target : float
        Redundancy target 𝒟⁰ > 0.
    rate : float
        Code rate R in (0, 1).
    d_max : float
        Largest per-symbol distortion.
    distortion_rate : Optional[DistortionRate]
        Defaults to the binary symmetric source under Hamming distortion.
    rho, alpha1 : float
        Rate and prefactor of the tail bound.
    etas, kappas : Optional[Iterable[float]]
        Sweep grids (defaults from settings).

    Returns
    -------
    BlocklengthReport
        The smallest log2 N with its parameters.

    Raises
    ------
    TargetUnattainableError
        If no pair of the sweep reaches the target.
    """
    # pylint: disable=too-many-arguments,too-many-locals
    if target <= 0:
        raise ValueError("The redundancy target must be positive.")
    if not 0.0 < rate < 1.0:
        raise ValueError("Rate must lie in (0, 1).")
    if d_max <= 0:
        raise ValueError("d_max must be positive.")
    distortion_rate = distortion_rate or binary_hamming_distortion_rate()
    log2_target = np.log2(target)

    best: Optional[BlocklengthReport] = None
    closest = (np.inf, {})
    for eta, kappa in _sweep_pairs(etas, kappas):
        params = BoundParams(eta=eta, kappa=kappa, rho=rho, alpha1=alpha1)

        def excess(log2_n: float, params: BoundParams = params) -> float:
            terms = source_bound_terms(log2_n, rate, d_max, distortion_rate, params)
            return float(np.logaddexp2(*terms) - log2_target)

        if params.pe_exponent <= 1.0:
            logger.debug("eta=%g kappa=%g: first term does not decay", eta, kappa)
            at_limit = min(excess(0.0), excess(MAX_LOG2_N))
        else:
            at_limit = excess(MAX_LOG2_N)
        if at_limit > 0 or params.pe_exponent <= 1.0:
            if at_limit + log2_target < closest[0]:
                closest = (at_limit + log2_target, {"eta": eta, "kappa": kappa})
            continue
        crossing = 0.0 if excess(0.0) <= 0 else brentq(excess, 0.0, MAX_LOG2_N, xtol=1e-9)
        rate_floor = max(
            0.0,
            (_log2_offset(params, 1.0) - np.log2(rate / 2.0)) / params.decay_alpha,
        )
        log2_n = max(crossing, rate_floor)
        if best is None or log2_n < best.log2_n:
            terms = source_bound_terms(log2_n, rate, d_max, distortion_rate, params)
            best = BlocklengthReport(
                "source",
                float(log2_n),
                params,
                (float(2.0 ** terms[0]), float(2.0 ** terms[1])),
                {"target": target, "rate": rate, "d_max": d_max},
            )

    if best is None:
        raise TargetUnattainableError(
            f"Redundancy {target:g} is not reachable within the parameter sweep.",
            best_bound=float(2.0 ** closest[0]),
            best_params=closest[1],
        )
    logger.info(
        "Source sweep: target=%g R=%g -> log2 N=%.4f at eta=%g kappa=%g",
        target,
        rate,
        best.log2_n,
        best.params.eta,
        best.params.kappa,
    )
    return best


@dataclass(frozen=True)
class EventFrequencies:
    """
    Observed frequencies of the polarization events next to their lower
    bounds.

    Attributes
    ----------
    stays_good, stays_good_bound : float
        Z_m <= δ for all m0 <= m <= n.
    many_plus, many_plus_bound : float
        More than (0.5 - η)(n - m0) '+' branches after m0.
    stays_bad, stays_bad_bound : float
        1 - Z_m² <= δ for all m0 <= m <= n.
    trials : int
        Number of trajectories.
    """

    stays_good: float
    stays_good_bound: float
    many_plus: float
    many_plus_bound: float
    stays_bad: float
    stays_bad_bound: float
    trials: int


def event_frequencies(
    channel: BmsChannel,
    n: int,
    m0: int,
    params: BoundParams,
    trials: int = 10_000,
    seed: int = 0,
    delta: Optional[float] = None,
) -> EventFrequencies:
    """
    Estimate the event probabilities used by the blocklength bounds from
    sampled trajectories of an erasure channel.

    Parameters
    ----------
    channel : BmsChannel
        An erasure channel (its Bhattacharyya process is sampled exactly).
    n, m0 : int
        Horizon and starting level of the events.
    params : BoundParams
        Supplies η, ρ, α₁ and (unless `delta` is given) δ.
    trials, seed : int
        Monte Carlo size and seed.
    delta : Optional[float]
        Threshold overriding ``params.delta``.
    """
    # pylint: disable=too-many-arguments
    if channel.kind is not ChannelKind.ERASURE:
        raise ValueError("Event frequencies are sampled for erasure channels only.")
    if not 0 <= m0 <= n:
        raise ValueError("Need 0 <= m0 <= n.")
    delta = params.delta if delta is None else delta
    if not 0.0 < delta < 1.0 / 3.0:
        raise ValueError("delta must lie in (0, 1/3).")
    capacity = symmetric_capacity(channel)
    branches, z_path = sample_trajectories(
        channel.parameter, n, SpectrumMode.EXACT_ERASURE, seed, trials
    )
    window = z_path[:, m0:]
    geometric = 2.0 ** (-params.rho * m0) / (1.0 - 2.0**-params.rho)

    stays_good = np.all(window <= delta, axis=1).mean()
    stays_bad = np.all(1.0 - window**2 <= delta, axis=1).mean()
    many_plus = (branches[:, m0:].sum(axis=1) > (0.5 - params.eta) * (n - m0)).mean()
    return EventFrequencies(
        stays_good=float(stays_good),
        stays_good_bound=capacity - params.alpha1 / (2.0 * delta) * geometric,
        many_plus=float(many_plus),
        many_plus_bound=1.0 - 2.0 ** (-params.capacity_gap * (n - m0)),
        stays_bad=float(stays_bad),
        stays_bad_bound=1.0 - capacity - params.alpha1 / delta * geometric,
        trials=trials,
    )


def persistent_split_check(
    channel: BmsChannel, n: int, m0: int, delta: float
) -> Tuple[float, float]:
    """
    Exact fraction of sub-channels of an erasure channel with Z_m <= δ for
    all m0 <= m <= n, and its lower bound I(W) - Σ_{m=m0}^{n} Pr(Y_m > δ).
    """
    if channel.kind is not ChannelKind.ERASURE:
        raise ValueError("Exact splits are available for erasure channels only.")
    fraction = persistent_good_fraction(channel.parameter, n, m0, delta)
    band_mass = summed_band_mass(channel.parameter, m0, n, delta)
    return fraction, symmetric_capacity(channel) - band_mass


def mi_zeta_bound(
    capacity: float, zeta: float, m0: int, rho: float, alpha1: float
) -> float:
    """
    Lower bound on Pr(Z_n <= ζ for all n >= m0) obtained from the
    mutual-information rate: I(W) - (α₁/ζ²) · 2^{-ρ m0} / (1 - 2^-ρ).
    """
    if not 0.0 < zeta < 1.0:
        raise ValueError("zeta must lie in (0, 1).")
    return float(
        capacity - alpha1 / zeta**2 * 2.0 ** (-rho * m0) / (1.0 - 2.0**-rho)
    )


def print_bound_report(report: BlocklengthReport) -> None:
    """
    Display a blocklength report.
    """
    params = report.params
    print("=" * 50)
    print(f"Blocklength Bound ({report.kind} coding)")
    print("=" * 50)
    for key, value in report.inputs.items():
        print(f"{key}: {value:g}")
    print(f"Chosen eta={params.eta:g}, kappa={params.kappa:g}")
    print(f"log2 delta: {params.log2_delta:.4f}")
    print(f"decay alpha: {params.decay_alpha:.6f}")
    print(f"alpha1: {params.alpha1:.6f}")
    print(f"Bound terms: {report.terms[0]:.6g}, {report.terms[1]:.6g}")
    print(f"Required log2 N: {report.log2_n:.4f}")
    print(f"Scaling exponent mu = 1 + 1/rho: {report.mu:.4f}")
    print("=" * 50)
