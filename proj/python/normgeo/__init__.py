"""Norm geometry toolkit: functionals n_{x,y}, angular distances, classical
inequalities and inner-product detection by counterexample search."""

from ._normgeo import (  # noqa: F401
    Norm,
    __version__,
    angular_distance,
    batch_min_slack,
    convexity_defect,
    detect_inner_product,
    dw_constant_estimate,
    evaluate_inequality,
    gram_validate,
    inequality_ids,
    n_curve,
    n_eval,
    one_sided_derivative,
    parallelogram_defect_search,
    quadratic_difference_defect,
    reciprocal_order_agreement,
    reflection_identity_defect,
    skew_angular_distance,
    validate_norm_axioms,
    violation_search,
)
