"""Causal classification of two-mode Gaussian quadrature correlations."""

from .atemporality import (
    AtemporalityReport,
    Classification,
    classify,
    forward_robustness,
    general_noise_oracle,
    retrieve_forward,
    retrieve_reverse,
    reverse_robustness,
    robustness_oracle,
)
from .channels import (
    CpVerdict,
    GaussianChannel,
    apply,
    identity_channel,
    is_cp,
    loss_channel,
    phase_channel,
    temporal_mechanism,
)
from .entanglement import (
    SymplecticSpectrum,
    example1_thresholds,
    is_entangled,
    log_negativity,
    max_temporal_negativity,
    partial_transpose,
    symplectic_min,
)
from .measurement import (
    CMEstimate,
    SampleBatch,
    classify_with_confidence,
    estimate_cm,
    sample_all_settings,
    sample_setting,
)
from .states import (
    SpaceTimeCM,
    StandardFormRecord,
    assemble,
    beam_splitter_mix,
    is_physical_spatial,
    random_mixed_state,
    random_pure_state,
    squeezed,
    thermal,
    to_standard_form,
    two_mode_squeezed_thermal,
)

__version__ = "0.1.0"

__all__ = [
    "AtemporalityReport",
    "Classification",
    "CMEstimate",
    "CpVerdict",
    "GaussianChannel",
    "SampleBatch",
    "SpaceTimeCM",
    "StandardFormRecord",
    "SymplecticSpectrum",
    "apply",
    "assemble",
    "beam_splitter_mix",
    "classify",
    "classify_with_confidence",
    "estimate_cm",
    "example1_thresholds",
    "forward_robustness",
    "general_noise_oracle",
    "identity_channel",
    "is_cp",
    "is_entangled",
    "is_physical_spatial",
    "log_negativity",
    "loss_channel",
    "max_temporal_negativity",
    "partial_transpose",
    "phase_channel",
    "random_mixed_state",
    "random_pure_state",
    "retrieve_forward",
    "retrieve_reverse",
    "reverse_robustness",
    "robustness_oracle",
    "sample_all_settings",
    "sample_setting",
    "squeezed",
    "symplectic_min",
    "temporal_mechanism",
    "thermal",
    "to_standard_form",
    "two_mode_squeezed_thermal",
]
