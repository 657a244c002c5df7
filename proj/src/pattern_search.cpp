#include "normgeo/pattern_search.hpp"

#include <limits>

namespace normgeo {

PatternSearchOutcome maximize_by_pattern_search(std::vector<double> start, const SearchObjective& objective,
                                                const SearchProjection& project,
                                                const PatternSearchOptions& options) {
  PatternSearchOutcome out;
  out.value = -std::numeric_limits<double>::infinity();
  out.params = std::move(start);
  if (!project(out.params)) {
    ++out.rejected;
  } else {
    ++out.evaluations;
    if (auto v = objective(out.params)) {
      out.value = *v;
    } else {
      ++out.rejected;
    }
  }

  double step = options.step_init;
  std::vector<double> candidate;
  while (out.iterations < options.max_iters && step >= options.min_step) {
    ++out.iterations;
    bool improved = false;
    for (std::size_t i = 0; i < out.params.size(); ++i) {
      for (const double direction : {1.0, -1.0}) {
        candidate = out.params;
        candidate[i] += direction * step;
        if (!project(candidate)) {
          ++out.rejected;
          continue;
        }
        ++out.evaluations;
        const auto v = objective(candidate);
        if (!v) {
          ++out.rejected;
          continue;
        }
        if (*v > out.value) {
          out.params.swap(candidate);
          out.value = *v;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= options.step_shrink;
  }
  return out;
}

}  // namespace normgeo
