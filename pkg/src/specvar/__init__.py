"""Euclidean and hyperbolic spectral-variation bounds for non-normal matrices."""

from .blaschke import (
    BlaschkeProduct,
    blaschke_eval,
    blaschke_minimax,
    cheb_poly_lower_bound,
    max_abs_on_segment,
)
from .bounds import (
    BoundInputs,
    BoundReport,
    Disk,
    assemble_report,
    containment_condition,
    euclid_bound,
    hyper_bound_exact,
    hyper_bound_simple,
    krause_alpha,
    krause_bound,
    krause_condition,
    localization_disks,
)
from .elliptic import inverse_k, modulus_k, modulus_k_product, modulus_power_pair, theta2, theta3
from .harness import (
    CurveFamily,
    ExperimentConfig,
    SuiteReport,
    curve_interpolation_check,
    figure_data,
    localization_dataset,
    random_contraction,
    random_perturbation,
    random_prescribed_contraction,
    run_suite,
    trace_curves,
)
from .hypgeo import Geodesic, HyperbolicDisk, project, pseudo_distance, to_euclidean
from .linalg import (
    eigenvalues,
    load_matrix,
    matrix_from_json,
    matrix_to_json,
    min_poly_degree,
    op_norm,
    save_matrix,
    spectral_radius,
)
from .matching import bottleneck_assignment, d_euclid, d_hyper
from .modelop import (
    ModelMatrix,
    build_model_matrix,
    inverse_norm_bound,
    mobius_resolvent_bound,
    rational_dominance_check,
)

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
