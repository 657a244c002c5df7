#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "normgeo/config.hpp"
#include "normgeo/norm.hpp"

namespace normgeo {

// The one-variable map t -> ||x + t y|| and the identities built on it.

struct CurveSample {
  double t = 0.0;
  double value = 0.0;
};

/// One grid point carrying both n_{x,y}(t) and n_{y,x}(t).
struct CurvePoint {
  CurveSample xy;
  CurveSample yx;
  double t() const noexcept { return xy.t; }
};

enum class Side { Left, Right };

struct DerivativeEstimate {
  double t = 0.0;
  Side side = Side::Right;
  double value = 0.0;
  double step_sequence_floor = 0.0;  // smallest step actually used
  std::size_t refinements = 0;
};

/// ||x + t y||
double n_eval(const Norm& norm, const Vector& x, const Vector& y, double t);

/// Uniform grid of `steps` points on [t_min, t_max], endpoints exact.
std::vector<double> uniform_grid(double t_min, double t_max, std::size_t steps);

std::vector<CurvePoint> n_curve(const Norm& norm, const Vector& x, const Vector& y, double t_min,
                                double t_max, std::size_t steps);

/// One-sided difference quotients on h_k = h0 * 2^-k, h0 = 1e-2 (1 + |t|),
/// with one Richardson step per level. Returns once successive extrapolants
/// agree to tol.derivative_agreement (relative to 1 + |value|); throws
/// ConvergenceError if the step floor is reached first.
DerivativeEstimate one_sided_derivative(const Norm& norm, const Vector& x, const Vector& y, double t,
                                        Side side, const Tolerances& tol = kDefaultTolerances);

/// max over consecutive grid triples (a, ·, b) of n((a+b)/2) - (n(a)+n(b))/2.
/// Nonpositive (up to round-off) for every norm.
double convexity_defect(const Norm& norm, const Vector& x, const Vector& y, std::span<const double> t_grid);

/// |n_{x,y}(t) - n_{x,-y}(-t)|, both sides evaluated independently.
double reflection_identity_defect(const Norm& norm, const Vector& x, const Vector& y, double t);

/// Whether ||y+tx|| <= ||x+ty|| and ||x+y/t|| <= ||y+x/t|| agree. Either
/// comparison falling inside its tie band counts as agreement.
bool reciprocal_order_agreement(const Norm& norm, const Vector& x, const Vector& y, double t,
                                const Tolerances& tol = kDefaultTolerances);

/// |(n²_{x,y}(t) − n²_{y,x}(t)) − (‖x‖² − ‖y‖²)(1 − t²)| for a quadratic norm.
/// Throws DomainError if `norm` is not Quadratic.
double quadratic_difference_defect(const Norm& norm, const Vector& x, const Vector& y, double t);
/// Same, validating `gram` first (InvalidNormError if not SPD).
double quadratic_difference_defect(const SquareMatrix& gram, const Vector& x, const Vector& y, double t);

}  // namespace normgeo
