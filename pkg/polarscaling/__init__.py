# __init__.py
"""
PolarScaling: finite-length scaling of polar codes, from the recursive
supremum functionals that bound the polarization speed to explicit blocklength
guarantees and a polar codec that checks them empirically.
"""

# channel.py
from .channel import (
    BmsChannel,
    ChannelKind,
    ChannelStats,
    symmetric_capacity,
    bhattacharyya,
    channel_stats,
    print_channel_stats,
    minus_transform,
    plus_transform,
    load_channels,
    select_channel,
    predefined_channels,
    parse_channel,
)

# polarization.py
from .polarization import (
    SpectrumMode,
    PolarSpectrum,
    Trajectory,
    plus_z,
    minus_z,
    evolve_spectrum,
    explicit_spectrum,
    sample_trajectory,
    sample_trajectories,
    fraction_unpolarized,
    split_fractions,
    persistent_good_fraction,
    summed_band_mass,
    fit_decay_rate,
    export_spectrum,
    export_trajectory,
    load_spectrum,
)

# exponent.py
from .exponent import (
    Variant,
    Side,
    GridFunction,
    ExponentResult,
    make_f0,
    make_g0,
    step_fk,
    step_gk,
    tail_step,
    lk_sup,
    eps_bounds,
    rho_series,
    tail_limit_rates,
    is_submultiplicative,
    curve_frame,
    series_frame,
    print_exponent_report,
)

# bounds.py
from .bounds import (
    BoundParams,
    BlocklengthReport,
    DistortionRate,
    EventFrequencies,
    alpha1_constant,
    alpha1_from_exponents,
    reference_alpha1,
    delta_of,
    log2_delta_of,
    decay_alpha_of,
    scaling_mu,
    tail_probability_bound,
    channel_bound_terms,
    required_blocklength_channel,
    sweep_channel_blocklength,
    rate_condition_gap,
    union_error_bound,
    binary_hamming_distortion_rate,
    source_bound_terms,
    required_blocklength_source,
    event_frequencies,
    persistent_split_check,
    mi_zeta_bound,
    print_bound_report,
)

# codec.py
from .codec import (
    PolarCode,
    DecoderState,
    SuccessiveCancellation,
    ChannelSimulation,
    SourceSimulation,
    encode,
    polar_transform,
    construct_code,
    error_bound,
    sc_decode,
    sc_source_encode,
    distortion,
    simulate_channel,
    simulate_source,
    save_code,
    load_code,
    print_simulation_report,
)

# config.py
from .config import Settings, load_settings, get_settings

# errors.py
from .errors import ResourceCapError, AlphabetCapError, TargetUnattainableError

# utils.py
from .utils import (
    binary_entropy,
    inverse_binary_entropy,
    bit_reversal_permutation,
    RangeMaxQuery,
    trial_generator,
)

# Define an __all__ so that `from polarscaling import *` will only import these symbols
__all__ = [
    # From channel.py
    "BmsChannel",
    "ChannelKind",
    "ChannelStats",
    "symmetric_capacity",
    "bhattacharyya",
    "channel_stats",
    "print_channel_stats",
    "minus_transform",
    "plus_transform",
    "load_channels",
    "select_channel",
    "predefined_channels",
    "parse_channel",
    # From polarization.py
    "SpectrumMode",
    "PolarSpectrum",
    "Trajectory",
    "plus_z",
    "minus_z",
    "evolve_spectrum",
    "explicit_spectrum",
    "sample_trajectory",
    "sample_trajectories",
    "fraction_unpolarized",
    "split_fractions",
    "persistent_good_fraction",
    "summed_band_mass",
    "fit_decay_rate",
    "export_spectrum",
    "export_trajectory",
    "load_spectrum",
    # From exponent.py
    "Variant",
    "Side",
    "GridFunction",
    "ExponentResult",
    "make_f0",
    "make_g0",
    "step_fk",
    "step_gk",
    "tail_step",
    "lk_sup",
    "eps_bounds",
    "rho_series",
    "tail_limit_rates",
    "is_submultiplicative",
    "curve_frame",
    "series_frame",
    "print_exponent_report",
    # From bounds.py
    "BoundParams",
    "BlocklengthReport",
    "DistortionRate",
    "EventFrequencies",
    "alpha1_constant",
    "alpha1_from_exponents",
    "reference_alpha1",
    "delta_of",
    "log2_delta_of",
    "decay_alpha_of",
    "scaling_mu",
    "tail_probability_bound",
    "channel_bound_terms",
    "required_blocklength_channel",
    "sweep_channel_blocklength",
    "rate_condition_gap",
    "union_error_bound",
    "binary_hamming_distortion_rate",
    "source_bound_terms",
    "required_blocklength_source",
    "event_frequencies",
    "persistent_split_check",
    "mi_zeta_bound",
    "print_bound_report",
    # From codec.py
    "PolarCode",
    "DecoderState",
    "SuccessiveCancellation",
    "ChannelSimulation",
    "SourceSimulation",
    "encode",
    "polar_transform",
    "construct_code",
    "error_bound",
    "sc_decode",
    "sc_source_encode",
    "distortion",
    "simulate_channel",
    "simulate_source",
    "save_code",
    "load_code",
    "print_simulation_report",
    # From config.py
    "Settings",
    "load_settings",
    "get_settings",
    # From errors.py
    "ResourceCapError",
    "AlphabetCapError",
    "TargetUnattainableError",
    # From utils.py
    "binary_entropy",
    "inverse_binary_entropy",
    "bit_reversal_permutation",
    "RangeMaxQuery",
    "trial_generator",
]
