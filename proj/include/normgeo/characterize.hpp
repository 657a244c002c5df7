#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include "normgeo/config.hpp"
#include "normgeo/inequalities.hpp"
#include "normgeo/norm.hpp"

namespace normgeo {

struct SearchConfig {
  std::size_t restarts = 64;
  std::size_t iters_per_restart = 2000;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  RadiusRange radius{0.5, 4.0};
  double step_init = 0.5;
  double step_shrink = 0.5;
  double violation_threshold = 1e-7;
  // Threads used for restarts; 0 selects hardware_concurrency(). Results
  // do not depend on this value.
  unsigned workers = 0;

  /// Throws DomainError if any field is out of range.
  void validate() const;
};

struct SearchResult {
  InequalityId objective;
  double best_violation = 0.0;  // max(0, -best_slack)
  double best_slack = 0.0;      // slack of the witness
  Witness witness;
  std::size_t evaluations = 0;
  std::size_t restarts_used = 0;
  std::size_t skipped = 0;  // degenerate or rejected probes
  std::uint64_t seed = 0;
};

/// Multi-start pattern search for the largest violation of `objective`
/// (N_ORDERING, ALPHA_BETA or LORCH). Search variables are the coordinates
/// of x and y plus t or log|γ|; x and y stay in the Euclidean annulus
/// radius.lo <= |v| <= radius.hi, and for LORCH y is rescaled to ||x||
/// after every move. Restart r draws from RngStream::derive(seed, r).
SearchResult violation_search(const Norm& norm, InequalityId objective, const SearchConfig& config,
                              const Tolerances& tol = kDefaultTolerances);

struct PairEstimate {
  double value = 0.0;
  Vector x;
  Vector y;
  std::size_t evaluations = 0;
  std::size_t skipped = 0;
  std::size_t restarts = 0;
};

/// Dunkl–Williams ratio α[x,y] (||x|| + ||y||) / ||x − y||, or nullopt if
/// ||x − y|| < tol.dw_separation_floor (||x|| + ||y||).
std::optional<double> dunkl_williams_ratio(const Norm& norm, const Vector& x, const Vector& y,
                                           const Tolerances& tol = kDefaultTolerances);

/// |‖x+y‖² + ‖x−y‖² − 2‖x‖² − 2‖y‖²| / (‖x‖² + ‖y‖²)
double parallelogram_defect(const Norm& norm, const Vector& x, const Vector& y);

/// Lower bound on the Dunkl–Williams constant from `budget` refined
/// restarts. Iteration budget, radius and steps come from `tuning`.
PairEstimate dw_constant_estimate(const Norm& norm, std::size_t dim, std::size_t budget, std::uint64_t seed,
                                  const SearchConfig& tuning = {}, const Tolerances& tol = kDefaultTolerances);

PairEstimate parallelogram_defect_search(const Norm& norm, std::size_t dim, std::size_t budget,
                                         std::uint64_t seed, const SearchConfig& tuning = {});

enum class Verdict { Consistent, Violated };

std::string_view to_string(Verdict v);

struct DetectionVerdict {
  Verdict verdict = Verdict::Consistent;
  std::map<InequalityId, SearchResult> per_objective;
  PairEstimate parallelogram;
  PairEstimate dw;
  SearchConfig config;
  // CONSISTENT although the parallelogram law visibly fails: the
  // characterizing searches were not strong enough.
  bool search_insufficient = false;
  double wall_time_s = 0.0;
};

/// Runs the three characterizing searches, the parallelogram oracle and
/// the Dunkl–Williams estimator. VIOLATED iff some best_violation exceeds
/// config.violation_threshold. CONSISTENT only means nothing was found
/// under this budget and seed.
DetectionVerdict detect_inner_product(const Norm& norm, const SearchConfig& config,
                                      const Tolerances& tol = kDefaultTolerances);

}  // namespace normgeo
