"""
PolarScaling - Scaling Exponent

This module computes the iterated supremum functionals whose growth rates bound
how fast the polarization process leaves the unpolarized band:

- the Bhattacharyya variant f_{k+1}(z) = sup_y (f_k(z²) + f_k(y)) / 2 with
  y ∈ [z·sqrt(2 - z²), 2z - z²], started from f_0 = z^α (1 - z)^β;
- the mutual-information variant g_{k+1}(x) = sup_ε (g_k(x + ε) + g_k(x - ε)) / 2
  with ε ∈ [ε_l(x), ε_h(x)], started from a fixed concave base function.

Functions are sampled on a uniform grid of [0, 1]. The ratio curves
L_k(z) = f_k(z) / f_0(z) vanish as 0/0 at both ends, so inside narrow boundary
bands the Bhattacharyya iterates are evaluated through the exact boundary
recursions instead of the grid. The supremum L_k of the ratio curve gives the
rate ρ_k = -(1/k) log2 L_k.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from numpy.typing import ArrayLike

from .config import get_settings
from .errors import ResourceCapError
from .utils import RangeMaxQuery, binary_entropy, inverse_binary_entropy

logger = logging.getLogger(__name__)

# Base function of the mutual-information variant:
# g_0(x) = (1 - sqrt(1 - x²))^0.402 · (1 - x^1.11)^0.604
MI_INNER_EXPONENT = 0.402
MI_POWER = 1.11
MI_OUTER_EXPONENT = 0.604

# A tail branch whose contribution relative to its sibling falls below this
# ratio is dropped from the boundary recursion.
TAIL_PRUNE_RATIO = 2.0**-60

# Golden-section refinement steps of the mutual-information supremum
GOLDEN_STEPS = 40
_INV_PHI = (np.sqrt(5.0) - 1.0) / 2.0


class Variant(str, Enum):
    """Which transform law the functional iterates."""

    BHATTACHARYYA = "bhattacharyya"
    MUTUAL_INFORMATION = "mutual-information"


class Side(str, Enum):
    """Boundary of [0, 1] handled by a tail recursion."""

    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True, eq=False)
class GridFunction:
    """
    A function on [0, 1] sampled at z_j = j / M, j = 0..M.

    Parameters
    ----------
    samples : numpy.ndarray
        The M + 1 samples; both endpoints are exactly 0.
    left_exponent : float
        Order of the base function at 0 (α for f_0 = z^α (1 - z)^β).
    right_exponent : float
        Order of the base function at 1 (β).
    k : int
        Iteration index.
    variant : Variant
        Transform law.
    previous : Optional[GridFunction]
        The iterate this one was computed from (None for a base function).
    """

    samples: np.ndarray = field(repr=False)
    left_exponent: float
    right_exponent: float
    k: int
    variant: Variant
    previous: Optional["GridFunction"] = field(default=None, repr=False)

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=float)
        if samples.ndim != 1 or samples.shape[0] < 3:
            raise ValueError("A grid function needs at least three samples.")
        if samples[0] != 0.0 or samples[-1] != 0.0:
            raise ValueError("Grid functions vanish at both endpoints.")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "variant", Variant(self.variant))

    @property
    def size(self) -> int:
        """Number of grid intervals M."""
        return self.samples.shape[0] - 1

    @property
    def grid(self) -> np.ndarray:
        """Grid points z_j = j / M."""
        return np.arange(self.size + 1) / self.size

    def __call__(self, z: ArrayLike) -> np.ndarray:
        """Linear interpolation of the samples."""
        return np.interp(z, self.grid, self.samples)

    def base(self, z: ArrayLike) -> np.ndarray:
        """Closed form of the base function of this variant."""
        z = np.asarray(z, dtype=float)
        if self.variant is Variant.BHATTACHARYYA:
            return z**self.left_exponent * (1.0 - z) ** self.right_exponent
        return _mi_base(z)

    def base_at_distance(self, offsets: ArrayLike, side: Union[Side, str]) -> np.ndarray:
        """
        Bhattacharyya base function at distance `offsets` from a boundary,
        evaluated without forming 1 - offset.
        """
        d = np.asarray(offsets, dtype=float)
        if Side(side) is Side.LEFT:
            return d**self.left_exponent * (1.0 - d) ** self.right_exponent
        return (1.0 - d) ** self.left_exponent * d**self.right_exponent

    def lineage(self) -> List["GridFunction"]:
        """The iterates f_k, f_{k-1}, ... back to the first stored one."""
        chain: List[GridFunction] = []
        node: Optional[GridFunction] = self
        while node is not None:
            chain.append(node)
            node = node.previous
        return chain


@dataclass(frozen=True, eq=False)
class ExponentResult:
    """
    Supremum of one ratio curve.

    Parameters
    ----------
    k : int
        Iteration index.
    L_k : float
        sup_z f_k(z) / f_0(z).
    rho_k : float
        -(1/k) log2 L_k, in bits per level.
    argmax_z : float
        Location of the supremum.
    variant : Variant
        Transform law.
    curve : Optional[Tuple[numpy.ndarray, numpy.ndarray]]
        Sampled ratio curve (z, L_k(z)), if kept.
    """

    k: int
    L_k: float  # pylint: disable=invalid-name
    rho_k: float
    argmax_z: float
    variant: Variant
    curve: Optional[Tuple[np.ndarray, np.ndarray]] = field(default=None, repr=False)


def _resolve_size(M: Optional[int]) -> int:  # pylint: disable=invalid-name
    size = get_settings().grid_size if M is None else int(M)
    if size < 1 << 10:
        raise ValueError("Grid size M must be at least 2^10.")
    return size


def make_f0(
    alpha: float, beta: float, M: Optional[int] = None  # pylint: disable=invalid-name
) -> GridFunction:
    """
    Base function f_0(z) = z^α (1 - z)^β of the Bhattacharyya variant.

    Parameters
    ----------
    alpha, beta : float
        Exponents in (0, 1).
    M : Optional[int]
        Grid intervals (at least 2^10; default from settings).

    Returns
    -------
    GridFunction
        Samples with exact zeros at both endpoints.

    Raises
    ------
    ValueError
        If an exponent or the grid size is out of range.
    """
    if not (0.0 < alpha < 1.0 and 0.0 < beta < 1.0):
        raise ValueError("Exponents alpha and beta must lie in (0, 1).")
    size = _resolve_size(M)
    z = np.arange(size + 1) / size
    samples = z**alpha * (1.0 - z) ** beta
    samples[0] = samples[-1] = 0.0
    return GridFunction(samples, alpha, beta, 0, Variant.BHATTACHARYYA)


def _mi_base(x: np.ndarray) -> np.ndarray:
    # 1 - sqrt(1 - x²) written without cancellation near 0
    inner = x * x / (1.0 + np.sqrt(np.clip(1.0 - x * x, 0.0, None)))
    outer = np.clip(1.0 - x**MI_POWER, 0.0, None)
    return inner**MI_INNER_EXPONENT * outer**MI_OUTER_EXPONENT


def make_g0(M: Optional[int] = None) -> GridFunction:  # pylint: disable=invalid-name
    """
    Base function of the mutual-information variant,
    g_0(x) = (1 - sqrt(1 - x²))^0.402 · (1 - x^1.11)^0.604.

    Its order is 0.804 at 0 (since 1 - sqrt(1 - x²) = x²/2 + O(x⁴)) and
    0.604 at 1.
    """
    size = _resolve_size(M)
    x = np.arange(size + 1) / size
    samples = _mi_base(x)
    samples[0] = samples[-1] = 0.0
    return GridFunction(
        samples,
        2.0 * MI_INNER_EXPONENT,
        MI_OUTER_EXPONENT,
        0,
        Variant.MUTUAL_INFORMATION,
    )


def _log_iterate(f: GridFunction) -> None:
    logger.info(
        "variant=%s alpha=%g beta=%g M=%d k=%d tail_band=%g",
        f.variant.value,
        f.left_exponent,
        f.right_exponent,
        f.size,
        f.k,
        get_settings().tail_band,
    )


def step_fk(f: GridFunction) -> GridFunction:
    """
    One iteration of the Bhattacharyya functional.

    For every grid point z, the supremum of f_k over
    [z·sqrt(2 - z²), 2z - z²] is the larger of f_k at both interval endpoints
    (by interpolation) and the largest grid sample inside the interval (by a
    range-maximum query). Since f_k is piecewise linear between samples, this
    is the exact supremum of the interpolant.

    Raises
    ------
    ValueError
        If `f` is not a Bhattacharyya iterate.
    """
    if f.variant is not Variant.BHATTACHARYYA:
        raise ValueError("step_fk iterates the Bhattacharyya variant only.")
    size = f.size
    z = f.grid
    lower = z * np.sqrt(2.0 - z * z)
    upper = z * (2.0 - z)

    query = RangeMaxQuery(f.samples)
    first = np.ceil(lower * size).astype(np.int64)
    last = np.floor(upper * size).astype(np.int64)
    inner = query(first, last + 1)
    best = np.maximum(np.maximum(f(lower), f(upper)), inner)

    samples = 0.5 * (f(z * z) + best)
    samples[0] = samples[-1] = 0.0
    result = GridFunction(
        samples, f.left_exponent, f.right_exponent, f.k + 1, f.variant, previous=f
    )
    _log_iterate(result)
    return result


def _tail_children(dist: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Distances to the boundary of the two arguments of a boundary recursion.

    Returns (far, near_left, near_right): the far child is 2d - d² on both
    sides; the near child is d² on the left and the distance of
    z·sqrt(2 - z²) from 1 on the right, d²(2 - d)² / (1 + (1 - d)sqrt(1 + 2d - d²)).
    """
    far = dist * (2.0 - dist)
    near_left = dist * dist
    root = np.sqrt(1.0 + 2.0 * dist - dist * dist)
    near_right = dist * dist * (2.0 - dist) ** 2 / (1.0 + (1.0 - dist) * root)
    return far, near_left, near_right


def _check_monotone_band(chain: Sequence[GridFunction], side: Side, band: float) -> None:
    for g in chain[:-1]:
        width = max(2, int(np.ceil(2.0 * band * g.size)))
        segment = g.samples[: width + 1] if side is Side.LEFT else g.samples[-width - 1 :][::-1]
        if np.any(np.diff(segment) < 0):
            logger.warning(
                "f_%d is not monotone on the %s tail band of width %g; "
                "the boundary recursion may be inaccurate",
                g.k,
                side.value,
                2.0 * band,
            )


def tail_step(
    f: GridFunction,
    offsets: ArrayLike,
    side: Union[Side, str],
    band: Optional[float] = None,
    node_cap: Optional[int] = None,
) -> np.ndarray:
    """
    Evaluate f_k inside a boundary band through the exact boundary recursions.

    Near 0 the supremum sits at the right end of the interval, so
    f_{j+1}(z) = (f_j(z²) + f_j(2z - z²)) / 2; near 1 it sits at the left end,
    so f_{j+1}(z) = (f_j(z²) + f_j(z·sqrt(2 - z²))) / 2. The recursion is
    unrolled down to the closed form of f_0. Arguments that leave the band
    before reaching f_0 are read from the stored iterate f_j of the matching
    level, and branches whose contribution is negligible relative to their
    sibling (ratio below 2^-60 by the boundary order of f_0) are dropped.

    Parameters
    ----------
    f : GridFunction
        A Bhattacharyya iterate f_k produced by :func:`step_fk` (its chain of
        previous iterates is used).
    offsets : array_like
        Distances from the boundary: z itself on the left, 1 - z on the right.
    side : Side or str
        ``left`` or ``right``.
    band : Optional[float]
        Tail band width (default from settings).
    node_cap : Optional[int]
        Largest number of live recursion nodes (default from settings).

    Returns
    -------
    numpy.ndarray
        f_k at the requested points.

    Raises
    ------
    ValueError
        If a point lies outside the tail band, the variant is not
        Bhattacharyya, or the chain of iterates is incomplete.
    ResourceCapError
        If the recursion outgrows `node_cap`.
    """
    settings = get_settings()
    band = settings.tail_band if band is None else band
    node_cap = settings.tail_node_cap if node_cap is None else node_cap
    side = Side(side)
    if f.variant is not Variant.BHATTACHARYYA:
        raise ValueError("Boundary recursions exist for the Bhattacharyya variant only.")
    dist = np.atleast_1d(np.asarray(offsets, dtype=float))
    if np.any((dist <= 0.0) | (dist > band)):
        raise ValueError(f"Tail evaluation points must lie within (0, {band}].")
    if f.k == 0:
        return f.base_at_distance(dist, side)

    chain = f.lineage()
    if len(chain) != f.k + 1:
        raise ValueError("tail_step needs the full chain of iterates back to f_0.")
    _check_monotone_band(chain, side, band)
    order = f.left_exponent if side is Side.LEFT else f.right_exponent

    total = np.zeros(dist.shape[0])
    weight = np.ones_like(dist)
    root = np.arange(dist.shape[0])
    for depth in range(f.k):
        remaining = f.k - depth - 1
        far, near_left, near_right = _tail_children(dist)
        near = near_left if side is Side.LEFT else near_right
        keep = (near / far) ** order >= TAIL_PRUNE_RATIO
        child_dist = np.concatenate([far, near[keep]])
        child_weight = 0.5 * np.concatenate([weight, weight[keep]])
        child_root = np.concatenate([root, root[keep]])

        if remaining == 0:
            values = f.base_at_distance(child_dist, side)
            total += np.bincount(child_root, child_weight * values, total.shape[0])
            break

        inside = child_dist <= band
        outside = ~inside
        if np.any(outside):
            iterate = chain[depth + 1]
            points = child_dist[outside] if side is Side.LEFT else 1.0 - child_dist[outside]
            total += np.bincount(
                child_root[outside],
                child_weight[outside] * iterate(points),
                total.shape[0],
            )
        dist, weight, root = child_dist[inside], child_weight[inside], child_root[inside]
        if dist.shape[0] > node_cap:
            raise ResourceCapError(
                f"Tail recursion needs {dist.shape[0]} nodes (cap {node_cap})."
            )
        if dist.shape[0] == 0:
            break
    return total


def lk_sup(
    f_k: GridFunction,
    f_0: GridFunction,
    keep_curve: bool = True,
    band: Optional[float] = None,
    probes: Optional[int] = None,
) -> ExponentResult:
    """
    Supremum of the ratio curve L_k(z) = f_k(z) / f_0(z).

    The curve is evaluated at the grid points strictly inside
    (band, 1 - band). For the Bhattacharyya variant it is completed by
    log-spaced probe points in each tail band evaluated with
    :func:`tail_step`; the mutual-information curve stays on the interior
    grid.

    Parameters
    ----------
    f_k, f_0 : GridFunction
        Iterate and base function on the same grid and variant.
    keep_curve : bool
        Store the sampled curve in the result.
    band : Optional[float]
        Tail band width (default from settings).
    probes : Optional[int]
        Probe points per tail band (default from settings).

    Returns
    -------
    ExponentResult
        L_k, ρ_k and the location of the supremum.
    """
    settings = get_settings()
    band = settings.tail_band if band is None else band
    probes = settings.tail_probes if probes is None else probes
    if f_k.variant is not f_0.variant or f_k.size != f_0.size:
        raise ValueError("f_k and f_0 must share variant and grid.")

    z = f_k.grid
    interior = (z > band) & (z < 1.0 - band)
    curve_z = z[interior]
    curve_l = f_k.samples[interior] / f_0.samples[interior]

    if f_k.variant is Variant.BHATTACHARYYA:
        offsets = np.geomspace(band * 1e-3, band, probes)
        left = tail_step(f_k, offsets, Side.LEFT, band=band) / f_k.base_at_distance(
            offsets, Side.LEFT
        )
        right = tail_step(f_k, offsets, Side.RIGHT, band=band) / f_k.base_at_distance(
            offsets, Side.RIGHT
        )
        curve_z = np.concatenate([offsets, curve_z, (1.0 - offsets)[::-1]])
        curve_l = np.concatenate([left, curve_l, right[::-1]])

    best = int(np.argmax(curve_l))
    l_k = float(curve_l[best])
    rho_k = -np.log2(l_k) / f_k.k if f_k.k > 0 else 0.0
    return ExponentResult(
        k=f_k.k,
        L_k=l_k,
        rho_k=float(rho_k),
        argmax_z=float(curve_z[best]),
        variant=f_k.variant,
        curve=(curve_z, curve_l) if keep_curve else None,
    )


def eps_bounds(x: ArrayLike) -> Tuple[np.ndarray, np.ndarray]:
    """
    Bounds of the spread ε = I(W⁺) - I(W) for a channel with capacity x.

    ε_l(x) = x + h2(2p(1 - p)) - 1 with p = h2⁻¹(1 - x), and ε_h(x) = x - x².
    ε_l is clamped into [0, ε_h] to absorb rounding noise.

    Returns
    -------
    Tuple[numpy.ndarray, numpy.ndarray]
        (ε_l, ε_h) with the shape of `x`.
    """
    x = np.asarray(x, dtype=float)
    if np.any((x < 0) | (x > 1)):
        raise ValueError("Capacities must lie in [0, 1].")
    p = np.asarray(inverse_binary_entropy(1.0 - x))
    eps_high = x - x * x
    eps_low = x + np.asarray(binary_entropy(2.0 * p * (1.0 - p))) - 1.0
    eps_low = np.clip(eps_low, 0.0, eps_high)
    return eps_low, eps_high


@lru_cache(maxsize=4)
def _spread_bounds(size: int) -> Tuple[np.ndarray, np.ndarray]:
    return eps_bounds(np.arange(size + 1) / size)


def _pair_value(g: GridFunction, x: np.ndarray, eps: np.ndarray) -> np.ndarray:
    return g(np.clip(x + eps, 0.0, 1.0)) + g(np.clip(x - eps, 0.0, 1.0))


def step_gk(g: GridFunction, candidates: Optional[int] = None) -> GridFunction:
    """
    One iteration of the mutual-information functional.

    The supremum over ε ∈ [ε_l(x), ε_h(x)] of g(x + ε) + g(x - ε) is found
    by scanning `candidates` equally spaced spreads (both ends included) and
    refining around the best one by golden-section search.

    Raises
    ------
    ValueError
        If `g` is not a mutual-information iterate.
    """
    if g.variant is not Variant.MUTUAL_INFORMATION:
        raise ValueError("step_gk iterates the mutual-information variant only.")
    count = get_settings().mi_candidates if candidates is None else candidates
    x = g.grid
    eps_low, eps_high = _spread_bounds(g.size)
    width = eps_high - eps_low

    steps = np.linspace(0.0, 1.0, count)[:, None]
    spreads = eps_low[None, :] + steps * width[None, :]
    scan = _pair_value(g, x[None, :], spreads)
    best_index = np.argmax(scan, axis=0)
    columns = np.arange(x.shape[0])
    best = scan[best_index, columns]

    spacing = width / (count - 1)
    lo = np.clip(spreads[best_index, columns] - spacing, eps_low, eps_high)
    hi = np.clip(spreads[best_index, columns] + spacing, eps_low, eps_high)
    left = hi - _INV_PHI * (hi - lo)
    right = lo + _INV_PHI * (hi - lo)
    left_value = _pair_value(g, x, left)
    right_value = _pair_value(g, x, right)
    for _ in range(GOLDEN_STEPS):
        move_right = left_value < right_value
        lo = np.where(move_right, left, lo)
        hi = np.where(move_right, hi, right)
        left, right = hi - _INV_PHI * (hi - lo), lo + _INV_PHI * (hi - lo)
        left_value = _pair_value(g, x, left)
        right_value = _pair_value(g, x, right)
    best = np.maximum(best, np.maximum(left_value, right_value))

    samples = 0.5 * best
    samples[0] = samples[-1] = 0.0
    result = GridFunction(
        samples, g.left_exponent, g.right_exponent, g.k + 1, g.variant, previous=g
    )
    _log_iterate(result)
    return result


def rho_series(
    variant: Union[Variant, str] = Variant.BHATTACHARYYA,
    alpha: float = 0.7,
    beta: float = 0.6,
    k_max: int = 50,
    M: Optional[int] = None,  # pylint: disable=invalid-name
    curve_ks: Optional[Iterable[int]] = None,
) -> List[ExponentResult]:
    """
    Rates ρ_k for k = 1..k_max.

    Parameters
    ----------
    variant : Variant or str
        ``bhattacharyya`` (base z^α (1 - z)^β) or ``mutual-information``
        (fixed base function; `alpha` and `beta` are ignored).
    alpha, beta : float
        Exponents of the Bhattacharyya base function.
    k_max : int
        Number of iterations, at most 100.
    M : Optional[int]
        Grid intervals (default from settings).
    curve_ks : Optional[Iterable[int]]
        Iterations whose ratio curves are kept (default: 1 and k_max).

    Returns
    -------
    List[ExponentResult]
        One result per iteration.
    """
    if not 1 <= k_max <= 100:
        raise ValueError("k_max must lie in [1, 100].")
    variant = Variant(variant)
    keep = {1, k_max} if curve_ks is None else set(curve_ks)
    if variant is Variant.BHATTACHARYYA:
        base = make_f0(alpha, beta, M)
        step = step_fk
    else:
        base = make_g0(M)
        step = step_gk
    logger.info(
        "rho series: variant=%s alpha=%g beta=%g M=%d k_max=%d",
        variant.value,
        base.left_exponent,
        base.right_exponent,
        base.size,
        k_max,
    )

    results = []
    current = base
    for _ in range(k_max):
        current = step(current)
        results.append(lk_sup(current, base, keep_curve=current.k in keep))
        logger.info("k=%d rho_k=%.6f", current.k, results[-1].rho_k)
    return results


def tail_limit_rates(f_k: GridFunction, offset: float = 1e-6) -> Tuple[float, float]:
    """
    (1/k) log2 (f_k / f_0) at distance `offset` from each boundary; these
    approach α - 1 (left) and β - 1 (right).
    """
    if f_k.k == 0:
        return 0.0, 0.0
    rates = []
    for side in (Side.LEFT, Side.RIGHT):
        value = tail_step(f_k, [offset], side)[0]
        rates.append(float(np.log2(value / f_k.base_at_distance(offset, side)) / f_k.k))
    return rates[0], rates[1]


def is_submultiplicative(results: Sequence[ExponentResult], tol: float = 1e-6) -> bool:
    """
    Check L_k^(1/k) <= L_1 and L_k <= L_{k-1} · L_1 over consecutive results
    starting at k = 1.
    """
    by_k = {r.k: r.L_k for r in results}
    if 1 not in by_k:
        raise ValueError("The results must include k = 1.")
    l_1 = by_k[1]
    for k, l_k in by_k.items():
        if l_k ** (1.0 / k) > l_1 + tol:
            return False
        if k - 1 in by_k and l_k > by_k[k - 1] * l_1 + tol:
            return False
    return True


def curve_frame(result: ExponentResult) -> pd.DataFrame:
    """Ratio curve as columns (z, log2_L_k_over_k) = (z, (1/k) log2 L_k(z))."""
    if result.curve is None:
        raise ValueError(f"No curve was kept for k={result.k}.")
    z, values = result.curve
    return pd.DataFrame({"z": z, "log2_L_k_over_k": np.log2(values) / result.k})


def series_frame(results: Sequence[ExponentResult]) -> pd.DataFrame:
    """Series as columns (k, rho_k, L_k, log2_L_k_over_k, argmax_z)."""
    return pd.DataFrame(
        {
            "k": [r.k for r in results],
            "rho_k": [r.rho_k for r in results],
            "L_k": [r.L_k for r in results],
            "log2_L_k_over_k": [-r.rho_k for r in results],
            "argmax_z": [r.argmax_z for r in results],
        }
    )


def print_exponent_report(results: Sequence[ExponentResult]) -> None:
    """
    Display a rate series and the scaling exponent it implies.
    """
    if not results:
        raise ValueError("Nothing to report.")
    last = results[-1]
    print("=" * 50)
    print(f"Scaling Exponent Analysis ({last.variant.value})")
    print("=" * 50)
    for result in results:
        print(
            f"k={result.k:3d}  L_k={result.L_k:.6e}  rho_k={result.rho_k:.4f}  "
            f"argmax z={result.argmax_z:.4f}"
        )
    print(f"Rate at k={last.k}: {last.rho_k:.4f} bits per level")
    print(f"Implied scaling exponent mu = 1 + 1/rho: {1.0 + 1.0 / last.rho_k:.4f}")
    print("=" * 50)
