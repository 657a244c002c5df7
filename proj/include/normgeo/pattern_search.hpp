#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace normgeo {

struct PatternSearchOptions {
  double step_init = 0.5;
  double step_shrink = 0.5;
  double min_step = 1e-9;
  std::size_t max_iters = 2000;
};

struct PatternSearchOutcome {
  std::vector<double> params;
  double value = 0.0;  // -inf if no feasible point was ever evaluated
  std::size_t evaluations = 0;
  std::size_t rejected = 0;  // projections refused plus infeasible evaluations
  std::size_t iterations = 0;
};

/// Value to maximize at a point; nullopt marks a degenerate point.
using SearchObjective = std::function<std::optional<double>(std::span<const double>)>;
/// Maps a candidate back into the feasible set in place; false rejects it.
using SearchProjection = std::function<bool(std::vector<double>&)>;

/// Coordinate pattern search. Each iteration sweeps the coordinates,
/// probing +step then -step and taking the first strict improvement; a
/// sweep without improvement multiplies the step by step_shrink. Stops at
/// max_iters sweeps or once step < min_step.
PatternSearchOutcome maximize_by_pattern_search(std::vector<double> start, const SearchObjective& objective,
                                                const SearchProjection& project,
                                                const PatternSearchOptions& options);

}  // namespace normgeo
