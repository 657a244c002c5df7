#pragma once

// Shared fixtures and independent reference formulas for the test suites.
// Nothing here calls into the library's evaluation paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "normgeo/norm.hpp"

namespace normgeo::testing {

inline Norm lp(double p, std::size_t dim) { return Norm(NormSpec::lp(Exponent(p), dim)); }
inline Norm linf(std::size_t dim) { return Norm(NormSpec::lp(Exponent::infinity(), dim)); }

/// A Aᵀ + 0.1 I with standard normal A; always SPD.
inline SquareMatrix random_spd(std::size_t dim, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> a(dim * dim);
  for (double& v : a) v = normal(gen);
  SquareMatrix g(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      double s = 0.0;
      for (std::size_t k = 0; k < dim; ++k) s += a[r * dim + k] * a[c * dim + k];
      g(r, c) = s + (r == c ? 0.1 : 0.0);
    }
  // exact symmetry
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = r + 1; c < dim; ++c) g(c, r) = g(r, c);
  return g;
}

inline Norm random_quadratic(std::size_t dim, std::mt19937_64& gen) {
  return Norm(NormSpec::quadratic(random_spd(dim, gen)));
}

/// Builtin norm families exercised by property tests.
inline std::vector<Norm> norm_zoo(std::size_t dim, std::uint64_t seed = 7) {
  std::mt19937_64 gen(seed);
  std::vector<double> weights(dim);
  for (std::size_t i = 0; i < dim; ++i) weights[i] = 0.5 + static_cast<double>(i);
  std::vector<Norm> zoo;
  zoo.push_back(lp(1.0, dim));
  zoo.push_back(lp(2.0, dim));
  zoo.push_back(lp(3.0, dim));
  zoo.push_back(lp(1.5, dim));
  zoo.push_back(linf(dim));
  zoo.push_back(Norm(NormSpec::weighted_lp(Exponent(2.0), weights)));
  zoo.push_back(Norm(NormSpec::weighted_lp(Exponent(1.0), weights)));
  zoo.push_back(random_quadratic(dim, gen));
  return zoo;
}

// --- reference formulas on plain coordinate arrays ------------------------

using Coords = std::vector<double>;
using RefNorm = std::function<double(const Coords&)>;

inline double ref_l1(const Coords& v) {
  double s = 0.0;
  for (double c : v) s += std::abs(c);
  return s;
}

inline double ref_linf(const Coords& v) {
  double m = 0.0;
  for (double c : v) m = std::max(m, std::abs(c));
  return m;
}

inline Coords ref_axpy(const Coords& x, double t, const Coords& y) {
  Coords out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + t * y[i];
  return out;
}

inline Coords ref_scale(const Coords& x, double s) { return ref_axpy(Coords(x.size(), 0.0), s, x); }

/// Largest violations of the three characterizing inequalities found by
/// exhaustive enumeration of a 2-D grid.
struct GridOracleResult {
  double n_ordering = 0.0;
  double alpha_beta = 0.0;
  double lorch = 0.0;
};

inline GridOracleResult brute_force_grid_oracle(const RefNorm& norm, double box, std::size_t points_per_axis,
                                                std::size_t t_points, std::size_t gamma_points) {
  GridOracleResult best;
  std::vector<double> axis(points_per_axis);
  for (std::size_t i = 0; i < points_per_axis; ++i)
    axis[i] = -box + 2.0 * box * static_cast<double>(i) / static_cast<double>(points_per_axis - 1);

  for (double x0 : axis)
    for (double x1 : axis)
      for (double y0 : axis)
        for (double y1 : axis) {
          const Coords x{x0, x1}, y{y0, y1};
          const double nx = norm(x), ny = norm(y);
          if (nx == 0.0 || ny == 0.0) continue;
          const Coords& a = nx <= ny ? x : y;
          const Coords& b = nx <= ny ? y : x;
          for (std::size_t k = 0; k < t_points; ++k) {
            const double t = static_cast<double>(k) / static_cast<double>(t_points - 1);
            best.n_ordering = std::max(best.n_ordering, norm(ref_axpy(a, t, b)) - norm(ref_axpy(b, t, a)));
          }
          const double alpha = norm(ref_axpy(ref_scale(x, 1.0 / nx), -1.0, ref_scale(y, 1.0 / ny)));
          const double beta = norm(ref_axpy(ref_scale(x, 1.0 / ny), -1.0, ref_scale(y, 1.0 / nx)));
          best.alpha_beta = std::max(best.alpha_beta, alpha - beta);

          const Coords ys = ref_scale(y, nx / ny);
          const double lhs = norm(ref_axpy(x, 1.0, ys));
          for (std::size_t k = 0; k < gamma_points; ++k) {
            const double lg = std::log(0.125) + std::log(64.0) * static_cast<double>(k) /
                                                    static_cast<double>(gamma_points - 1);
            const double g = std::exp(lg);
            best.lorch = std::max(best.lorch, lhs - norm(ref_axpy(ref_scale(x, g), 1.0 / g, ys)));
          }
        }
  return best;
}

}  // namespace normgeo::testing
