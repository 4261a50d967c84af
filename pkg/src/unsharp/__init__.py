"""Entropy-based unsharpness of quantum measurements and entropic bounds.

The package quantifies how much of the entropy of measurement outcomes is
caused by the measuring device itself (its unsharpness) versus the measured
state, and implements the family of entropic uncertainty-relation lower
bounds built from that split: single-measurement resolution and minimized
device-uncertainty bounds, the pair bound -log2 C, the largest-overlap bound
and its white-noise extension B1, the direct-sum majorization bounds H(W),
Q(W) and B2, and the minimized pair device uncertainty with its
amplitude-damping closed form. All entropies are in bits.
"""

from .bounds import (
    BoundReport,
    MajorizationVector,
    ad_coles_closed_form,
    b1_bound,
    berta_reduced_bound,
    coles_bound,
    device_uncertainty_operator,
    device_uncertainty_white_noise,
    hw_bound,
    krishna_bound,
    majorization_vector,
    min_device_uncertainty,
    min_pair_device_bound,
    mu_bound,
    pair_bound_report,
    qw_b2_bound,
)
from .errors import (
    CompletenessViolated,
    DegenerateDraw,
    DimensionMismatch,
    EigenvalueAboveOne,
    NotHermitian,
    NotNormalized,
    NotOrthonormal,
    NotPositive,
    ParseError,
    TraceNotOne,
    ValidationError,
)
from .linalg import (
    DensityMatrix,
    SpectralDecomposition,
    hermitian_eig,
    operator_norm,
    overlap,
    pure_state_density,
    validate_density,
)
from .povm import (
    Povm,
    QubitPovmParams,
    amplitude_damping_povm,
    convex_combination,
    make_povm,
    mub_fourier_basis,
    projective_from_basis,
    qubit_povm,
    white_noise_povm,
)
from .sampling import (
    random_basis,
    random_mixed_state,
    random_povm,
    random_pure_state,
    random_state_vector,
    sampled_min,
)
from .uncertainty import (
    binary_entropy,
    device_uncertainty,
    device_uncertainty_qubit,
    f_white_noise,
    outcome_probs,
    quantum_uncertainty,
    shannon_entropy,
    von_neumann_entropy,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CompletenessViolated",
    "DegenerateDraw",
    "DensityMatrix",
    "DimensionMismatch",
    "EigenvalueAboveOne",
    "MajorizationVector",
    "NotHermitian",
    "NotNormalized",
    "NotOrthonormal",
    "NotPositive",
    "ParseError",
    "Povm",
    "QubitPovmParams",
    "SpectralDecomposition",
    "TraceNotOne",
    "ValidationError",
    "ad_coles_closed_form",
    "amplitude_damping_povm",
    "b1_bound",
    "berta_reduced_bound",
    "binary_entropy",
    "coles_bound",
    "convex_combination",
    "device_uncertainty",
    "device_uncertainty_operator",
    "device_uncertainty_qubit",
    "device_uncertainty_white_noise",
    "f_white_noise",
    "hermitian_eig",
    "hw_bound",
    "krishna_bound",
    "majorization_vector",
    "make_povm",
    "min_device_uncertainty",
    "min_pair_device_bound",
    "mu_bound",
    "mub_fourier_basis",
    "operator_norm",
    "outcome_probs",
    "overlap",
    "pair_bound_report",
    "projective_from_basis",
    "pure_state_density",
    "quantum_uncertainty",
    "qubit_povm",
    "qw_b2_bound",
    "random_basis",
    "random_mixed_state",
    "random_povm",
    "random_pure_state",
    "random_state_vector",
    "sampled_min",
    "shannon_entropy",
    "validate_density",
    "von_neumann_entropy",
    "white_noise_povm",
]
