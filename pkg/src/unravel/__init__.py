"""Extremal Kraus unravelings and entropic uncertainty bounds."""

from .bounds import (
    BoundReport,
    PhiProblem,
    Povm,
    f_bar,
    f_factor,
    g_factor,
    phi_min_verify,
    povm_from_unraveling,
    povm_probabilities,
    renyi_uncertainty_check,
    tsallis_uncertainty_check,
)
from .channels import (
    ExtremalResult,
    Unraveling,
    apply_channel,
    effect_probabilities,
    extremal_unraveling,
    gram_matrix,
    remix,
    unraveling_entropy,
)
from .demos import AngleState, angle_momentum_demo, dft_matrix, dft_uncertainty_demo
from .ensembles import (
    MixedEnsemble,
    PureEnsemble,
    ensemble_density,
    ensemble_from_state,
    mixed_ensemble_bounds_check,
    pure_ensemble_bounds_check,
)
from .entropy import (
    ConjugateOrders,
    alpha_log,
    conjugate_order,
    quantum_entropy,
    renyi_entropy,
    renyi_from_tsallis,
    tsallis_entropy,
)
from .linalg import (
    haar_random_unitary,
    hermitian_eig,
    hs_inner,
    matrix_norms,
    psd_sqrt,
    random_density,
)
from .search import (
    SearchConfig,
    extremal_pair_renyi,
    extremal_pair_tsallis,
    renyi_extremal_search,
)

__all__ = [
    "AngleState",
    "BoundReport",
    "ConjugateOrders",
    "ExtremalResult",
    "MixedEnsemble",
    "PhiProblem",
    "Povm",
    "PureEnsemble",
    "SearchConfig",
    "Unraveling",
    "alpha_log",
    "angle_momentum_demo",
    "apply_channel",
    "conjugate_order",
    "dft_matrix",
    "dft_uncertainty_demo",
    "effect_probabilities",
    "ensemble_density",
    "ensemble_from_state",
    "extremal_pair_renyi",
    "extremal_pair_tsallis",
    "extremal_unraveling",
    "f_bar",
    "f_factor",
    "g_factor",
    "gram_matrix",
    "haar_random_unitary",
    "hermitian_eig",
    "hs_inner",
    "matrix_norms",
    "mixed_ensemble_bounds_check",
    "phi_min_verify",
    "povm_from_unraveling",
    "povm_probabilities",
    "psd_sqrt",
    "pure_ensemble_bounds_check",
    "quantum_entropy",
    "random_density",
    "remix",
    "renyi_entropy",
    "renyi_extremal_search",
    "renyi_from_tsallis",
    "renyi_uncertainty_check",
    "tsallis_entropy",
    "tsallis_uncertainty_check",
    "unraveling_entropy",
]
