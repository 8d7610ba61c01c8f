"""Two-qubit disentanglement toolkit."""

from .channels import (
    IsotropicChannel,
    KrausSet,
    PauliMixture,
    analytic_ppt_margin,
    apply_channel,
    apply_local,
    isotropic_kraus,
    kraus_set,
    pauli_mixture_kraus,
    quality_factor,
    threshold_ok,
    threshold_sweep,
    worst_case_margin,
)
from .cloning import CloningMode, Unattainable, clone_eta, min_copies
from .geometry import (
    BlochDecomposition,
    CorrelationProfile,
    Region,
    bell_auxiliary,
    bell_diag_eof,
    characteristic_vector,
    correlation_value,
    decompose,
    fef_direct,
    profile,
    recompose,
)
from .ideal import DisentanglementReport, batch_ideal_check, commuting, dephase_disentangle
from .linalg import (
    QubitState,
    TwoQubitState,
    eig_hermitian,
    fidelity,
    partial_trace,
    partial_transpose,
    sqrt_psd,
    tensor_product,
    validate_state,
)
from .separability import SeparabilityVerdict, Verdict, det_m, is_product, ppt_verdict
from .states import Kind, StateSpec, make_state

__version__ = "0.1.0"
