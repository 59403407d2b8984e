"""
PolarScaling - Utility Functions

This module provides general-purpose numerical helpers used throughout the
PolarScaling package: the binary entropy function and its inverse, the
bit-reversal permutation, a sparse-table range-maximum structure and the
counter-based pseudorandom streams used by every Monte Carlo routine.
"""

from typing import Union

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import entr

FloatOrArray = Union[float, np.ndarray]


def binary_entropy(p: ArrayLike) -> FloatOrArray:
    r"""
    Binary entropy function in bits.

    .. math::

        h_2(p) = -p \log_2 p - (1-p) \log_2 (1-p),

    with :math:`h_2(0) = h_2(1) = 0`.

    Parameters
    ----------
    p : array_like
        Probabilities in [0, 1].

    Returns
    -------
    float or numpy.ndarray
        :math:`h_2(p)`, with the shape of `p`.

    Raises
    ------
    ValueError
        If any probability lies outside [0, 1].
    """
    p_arr = np.asarray(p, dtype=float)
    if np.any((p_arr < 0) | (p_arr > 1)):
        raise ValueError("Binary entropy is defined for probabilities in [0, 1].")
    value = (entr(p_arr) + entr(1.0 - p_arr)) / np.log(2.0)
    return float(value) if value.ndim == 0 else value


def inverse_binary_entropy(h: ArrayLike, tol: float = 1e-14) -> FloatOrArray:
    """
    Inverse of the binary entropy function restricted to [0, 0.5].

    Computed by vectorized bisection on [0, 0.5] until the bracket is
    narrower than `tol`.

    Parameters
    ----------
    h : array_like
        Entropy values in [0, 1] (bits).
    tol : float, optional
        Absolute tolerance on the returned probability. Default is 1e-14.

    Returns
    -------
    float or numpy.ndarray
        The unique p in [0, 0.5] with h2(p) = h.

    Raises
    ------
    ValueError
        If any entropy value lies outside [0, 1] or `tol` is not positive.
    """
    if tol <= 0:
        raise ValueError("Tolerance must be positive.")
    h_arr = np.asarray(h, dtype=float)
    if np.any((h_arr < 0) | (h_arr > 1)):
        raise ValueError("Entropy values must lie in [0, 1].")

    lo = np.zeros_like(h_arr)
    hi = np.full_like(h_arr, 0.5)
    iterations = int(np.ceil(np.log2(0.5 / tol))) + 1
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        below = binary_entropy(mid) < h_arr
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    value = 0.5 * (lo + hi)
    return float(value) if value.ndim == 0 else value


def bit_reversal_permutation(n: int) -> np.ndarray:
    """
    Bit-reversal permutation of ``range(2**n)``.

    Parameters
    ----------
    n : int
        Number of address bits (non-negative).

    Returns
    -------
    numpy.ndarray
        Integer array ``perm`` with ``perm[i]`` equal to `i` with its `n`
        bits reversed. The permutation is an involution.

    Raises
    ------
    ValueError
        If `n` is negative.
    """
    if n < 0:
        raise ValueError("Number of bits must be non-negative.")
    indices = np.arange(1 << n, dtype=np.int64)
    reversed_indices = np.zeros_like(indices)
    for bit in range(n):
        reversed_indices |= ((indices >> bit) & 1) << (n - 1 - bit)
    return reversed_indices


class RangeMaxQuery:
    """
    Sparse table answering range-maximum queries in constant time.

    Level ``d`` of the table stores, at position ``i``, the maximum of
    ``data[i:i + 2**d]``. A query over ``[start, stop)`` combines two
    overlapping power-of-two blocks. Queries are vectorized: ``start`` and
    ``stop`` may be integer arrays of equal shape.

    Parameters
    ----------
    data : array_like
        One-dimensional sequence of floats.
    """

    def __init__(self, data: ArrayLike):
        values = np.asarray(data, dtype=float)
        if values.ndim != 1:
            raise ValueError("Range queries need one-dimensional data.")
        size = values.shape[0]
        self.size = size

        levels = max(1, size.bit_length())
        table = np.full((levels, size), -np.inf)
        table[0] = values
        for depth in range(1, levels):
            half = 1 << (depth - 1)
            span = size - (1 << depth) + 1
            if span <= 0:
                table = table[:depth]
                break
            table[depth, :span] = np.maximum(
                table[depth - 1, :span], table[depth - 1, half : half + span]
            )
        self._table = table

        # floor(log2(length)) for every possible query length
        log_table = np.zeros(size + 1, dtype=np.int64)
        log_table[1:] = np.frexp(np.arange(1, size + 1, dtype=float))[1] - 1
        self._log = log_table

    def __call__(self, start: ArrayLike, stop: ArrayLike) -> FloatOrArray:
        """
        Maximum of ``data[start:stop]`` for each pair of bounds.

        Empty ranges (``stop <= start``) yield ``-inf``.
        """
        lo = np.clip(np.asarray(start, dtype=np.int64), 0, self.size)
        hi = np.clip(np.asarray(stop, dtype=np.int64), 0, self.size)
        length = hi - lo
        empty = length <= 0
        safe_length = np.where(empty, 1, length)
        safe_lo = np.where(empty, 0, lo)
        depth = self._log[safe_length]
        right = safe_lo + safe_length - (1 << depth)
        result = np.maximum(self._table[depth, safe_lo], self._table[depth, right])
        result = np.where(empty, -np.inf, result)
        return float(result) if result.ndim == 0 else result


def trial_generator(seed: int, trial: int) -> np.random.Generator:
    """
    Pseudorandom stream for one Monte Carlo trial.

    The stream is a Philox counter-based generator keyed by `seed` whose
    counter starts in block `trial` (the most significant counter word), so
    trial streams never overlap and each trial is reproducible on its own,
    independently of execution order.

    Parameters
    ----------
    seed : int
        Non-negative experiment seed.
    trial : int
        Non-negative trial index.

    Returns
    -------
    numpy.random.Generator
        Generator dedicated to ``(seed, trial)``.
    """
    if seed < 0 or trial < 0:
        raise ValueError("Seed and trial index must be non-negative.")
    return np.random.Generator(np.random.Philox(key=seed, counter=trial << 192))
