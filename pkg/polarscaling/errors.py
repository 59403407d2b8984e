"""
PolarScaling - Errors

Exception types for the failure categories that callers (and the command-line
interface) need to tell apart. All of them derive from ``ValueError`` so that
code validating inputs the usual way keeps working.
"""

from typing import Any, Mapping, Optional


class ResourceCapError(ValueError):
    """A computation would exceed a configured memory or size cap."""


class AlphabetCapError(ResourceCapError):
    """
    An explicit channel transform would exceed the output alphabet cap.

    Parameters
    ----------
    message : str
        Description of the offending transform.
    index : Optional[int], optional
        Sub-channel index at which the cap was hit, when raised while building
        a spectrum.
    """

    def __init__(self, message: str, index: Optional[int] = None):
        self.index = index
        self.detail = message
        if index is not None:
            message = f"sub-channel {index}: {message}"
        super().__init__(
            f"{message}. Use the bound-tracked recursion "
            "(polarization.evolve_spectrum) instead."
        )


class TargetUnattainableError(ValueError):
    """
    A blocklength target cannot be met by any parameter pair in the sweep.

    Attributes
    ----------
    best_bound : float
        The smallest bound value reached over the sweep.
    best_params : Mapping[str, Any]
        The parameters at which ``best_bound`` was reached.
    """

    def __init__(
        self, message: str, best_bound: float, best_params: Mapping[str, Any]
    ):
        super().__init__(message)
        self.best_bound = best_bound
        self.best_params = dict(best_params)
