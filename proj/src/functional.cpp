#include "normgeo/functional.hpp"

#include <algorithm>
#include <cmath>

#include "normgeo/errors.hpp"

namespace normgeo {

double n_eval(const Norm& norm, const Vector& x, const Vector& y, double t) {
  if (!std::isfinite(t)) throw DomainError("t must be finite");
  return norm(x.plus_scaled(y, t));
}

std::vector<double> uniform_grid(double t_min, double t_max, std::size_t steps) {
  if (!(t_min < t_max) || !std::isfinite(t_min) || !std::isfinite(t_max)) {
    throw DomainError("grid needs finite t_min < t_max");
  }
  if (steps < 2) throw DomainError("grid needs at least 2 steps");
  std::vector<double> grid(steps);
  const double span = t_max - t_min;
  const auto last = static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) grid[i] = t_min + span * (static_cast<double>(i) / last);
  grid.front() = t_min;
  grid.back() = t_max;
  return grid;
}

std::vector<CurvePoint> n_curve(const Norm& norm, const Vector& x, const Vector& y, double t_min,
                                double t_max, std::size_t steps) {
  require_same_dim(x, y);
  std::vector<CurvePoint> out;
  out.reserve(steps);
  for (double t : uniform_grid(t_min, t_max, steps)) {
    out.push_back({{t, n_eval(norm, x, y, t)}, {t, n_eval(norm, y, x, t)}});
  }
  return out;
}

DerivativeEstimate one_sided_derivative(const Norm& norm, const Vector& x, const Vector& y, double t,
                                        Side side, const Tolerances& tol) {
  require_same_dim(x, y);
  const double sign = side == Side::Right ? 1.0 : -1.0;
  const double base = n_eval(norm, x, y, t);
  auto quotient = [&](double h) {
    // Right: (n(t+h) - n(t)) / h; Left: (n(t) - n(t-h)) / h.
    return sign * (n_eval(norm, x, y, t + sign * h) - base) / h;
  };

  DerivativeEstimate est;
  est.t = t;
  est.side = side;

  double h = tol.derivative_initial_step * (1.0 + std::abs(t));
  double prev_quotient = quotient(h);
  double prev_extrapolant = prev_quotient;
  bool have_extrapolant = false;
  for (std::size_t k = 1;; ++k) {
    const double half = h / 2.0;
    if (half < tol.derivative_step_floor) break;
    const double q = quotient(half);
    // One-sided quotients carry an O(h) error term; 2 D(h/2) - D(h) removes it.
    const double extrapolant = 2.0 * q - prev_quotient;
    est.refinements = k;
    est.step_sequence_floor = half;
    if (have_extrapolant &&
        std::abs(extrapolant - prev_extrapolant) < tol.derivative_agreement * (1.0 + std::abs(extrapolant))) {
      est.value = extrapolant;
      return est;
    }
    have_extrapolant = true;
    prev_extrapolant = extrapolant;
    prev_quotient = q;
    h = half;
  }
  throw ConvergenceError("one-sided derivative did not settle before step floor " +
                         std::to_string(tol.derivative_step_floor));
}

double convexity_defect(const Norm& norm, const Vector& x, const Vector& y, std::span<const double> t_grid) {
  require_same_dim(x, y);
  if (t_grid.size() < 3) throw DomainError("convexity check needs at least 3 grid points");
  if (!std::is_sorted(t_grid.begin(), t_grid.end())) throw DomainError("grid must be sorted");
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 2 < t_grid.size(); ++i) {
    const double a = t_grid[i];
    const double b = t_grid[i + 2];
    const double m = a + (b - a) / 2.0;
    const double defect = n_eval(norm, x, y, m) - (n_eval(norm, x, y, a) + n_eval(norm, x, y, b)) / 2.0;
    worst = std::max(worst, defect);
  }
  return worst;
}

double reflection_identity_defect(const Norm& norm, const Vector& x, const Vector& y, double t) {
  const Vector minus_y = -y;
  return std::abs(n_eval(norm, x, y, t) - n_eval(norm, x, minus_y, -t));
}

namespace {

// -1, 0 (tie), +1 for u vs v.
int compare_with_tie(double u, double v, double rel) {
  const double band = rel * (1.0 + std::max(std::abs(u), std::abs(v)));
  if (std::abs(u - v) <= band) return 0;
  return u < v ? -1 : 1;
}

}  // namespace

bool reciprocal_order_agreement(const Norm& norm, const Vector& x, const Vector& y, double t,
                                const Tolerances& tol) {
  if (t == 0.0 || !std::isfinite(t)) throw DomainError("reciprocal comparison needs finite t != 0");
  require_same_dim(x, y);
  const double inv = 1.0 / t;
  const int direct = compare_with_tie(norm(y.plus_scaled(x, t)), norm(x.plus_scaled(y, t)), tol.order_tie_relative);
  const int recip = compare_with_tie(norm(x.plus_scaled(y, inv)), norm(y.plus_scaled(x, inv)), tol.order_tie_relative);
  return direct == 0 || recip == 0 || direct == recip;
}

double quadratic_difference_defect(const Norm& norm, const Vector& x, const Vector& y, double t) {
  if (norm.kind() != NormKind::Quadratic) throw DomainError("quadratic_difference_defect needs a quadratic norm");
  const double nxy = n_eval(norm, x, y, t);
  const double nyx = n_eval(norm, y, x, t);
  const double nx = norm(x);
  const double ny = norm(y);
  return std::abs((nxy * nxy - nyx * nyx) - (nx * nx - ny * ny) * (1.0 - t * t));
}

double quadratic_difference_defect(const SquareMatrix& gram, const Vector& x, const Vector& y, double t) {
  return quadratic_difference_defect(Norm(NormSpec::quadratic(gram)), x, y, t);
}

}  // namespace normgeo
