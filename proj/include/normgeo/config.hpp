#pragma once

namespace normgeo {

/// Every numeric tolerance used by the library. Operations accept a
/// Tolerances record and fall back to kDefaultTolerances.
struct Tolerances {
  // Norm axioms (homogeneity and triangle), relative.
  double axiom_relative = 1e-9;
  // Gram matrix symmetry, relative to the largest entry.
  double gram_symmetry_relative = 1e-12;
  // Tie band for order comparisons: 1e-12 * (1 + scale).
  double order_tie_relative = 1e-12;
  // Equal-norm precondition of the Lorch inequality.
  double lorch_equal_norm_relative = 1e-9;
  // Universal inequalities: slack >= -tol * (1 + |lhs| + |rhs|).
  double universal_slack_relative = 1e-9;
  // One-sided derivative refinement.
  double derivative_agreement = 1e-7;
  double derivative_step_floor = 1e-10;
  double derivative_initial_step = 1e-2;
  // Dunkl–Williams ratio: pairs with ||x-y|| < floor * (||x|| + ||y||) are skipped.
  double dw_separation_floor = 1e-8;
  // Pattern search stops once the step falls below this.
  double search_min_step = 1e-9;
  // Parallelogram defect above which a CONSISTENT verdict is flagged.
  double parallelogram_flag = 1e-6;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace normgeo
