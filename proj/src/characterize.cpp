#include "normgeo/characterize.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <vector>

#include "normgeo/distances.hpp"
#include "normgeo/errors.hpp"
#include "normgeo/parallel.hpp"
#include "normgeo/pattern_search.hpp"

namespace normgeo {

namespace {

const double kLogGammaMin = std::log(kGammaMin);
const double kLogGammaMax = std::log(kGammaMax);

// Search vector: [x (dim) | y (dim) | aux], aux being t or log|γ|.
struct Layout {
  std::size_t dim;
  bool has_aux;

  std::span<const double> x(std::span<const double> p) const { return p.subspan(0, dim); }
  std::span<const double> y(std::span<const double> p) const { return p.subspan(dim, dim); }
};

Vector to_vector(std::span<const double> s) { return Vector(std::vector<double>(s.begin(), s.end())); }

// Pulls one block into the Euclidean annulus [lo, hi]; false for the zero vector.
bool project_block(std::vector<double>& p, std::size_t offset, std::size_t dim, RadiusRange radius) {
  double len = to_vector(std::span<const double>(p).subspan(offset, dim)).euclidean_norm();
  if (len == 0.0) return false;
  double factor = 1.0;
  if (len < radius.lo) factor = radius.lo / len;
  if (len > radius.hi) factor = radius.hi / len;
  if (factor != 1.0)
    for (std::size_t i = 0; i < dim; ++i) p[offset + i] *= factor;
  return true;
}

SearchProjection pair_projection(std::size_t dim, RadiusRange radius) {
  return [=](std::vector<double>& p) {
    return project_block(p, 0, dim, radius) && project_block(p, dim, dim, radius);
  };
}

PatternSearchOptions search_options(const SearchConfig& c, const Tolerances& tol) {
  return PatternSearchOptions{c.step_init, c.step_shrink, tol.search_min_step, c.iters_per_restart};
}

bool objective_allowed(InequalityId id) {
  return id == InequalityId::NOrdering || id == InequalityId::AlphaBeta || id == InequalityId::Lorch;
}

void require_dim(const Norm& norm, std::size_t dim) {
  if (dim != norm.dim()) {
    throw DomainError("search dim " + std::to_string(dim) + " does not match norm dim " +
                      std::to_string(norm.dim()));
  }
}

// Per-restart pair search result, reduced in restart order.
struct PairRun {
  std::vector<double> params;
  double value;
  std::size_t evaluations;
  std::size_t rejected;
};

PairEstimate reduce_pair_runs(const std::vector<PairRun>& runs, std::size_t dim) {
  std::size_t best = 0;
  PairEstimate est{-std::numeric_limits<double>::infinity(), Vector::zeros(dim), Vector::zeros(dim), 0, 0,
                   runs.size()};
  for (std::size_t r = 0; r < runs.size(); ++r) {
    est.evaluations += runs[r].evaluations;
    est.skipped += runs[r].rejected;
    if (runs[r].value > runs[best].value) best = r;
  }
  const Layout layout{dim, false};
  est.value = runs[best].value;
  est.x = to_vector(layout.x(runs[best].params));
  est.y = to_vector(layout.y(runs[best].params));
  return est;
}

template <class Ratio>
PairEstimate pair_search(const Norm& norm, std::size_t dim, std::size_t budget, std::uint64_t seed,
                         const SearchConfig& tuning, const Tolerances& tol, Ratio ratio) {
  require_dim(norm, dim);
  if (budget == 0) throw DomainError("budget must be >= 1");
  require_valid_radius(tuning.radius);
  const Layout layout{dim, false};
  const auto project = pair_projection(dim, tuning.radius);
  const SearchObjective objective = [&](std::span<const double> p) -> std::optional<double> {
    return ratio(to_vector(layout.x(p)), to_vector(layout.y(p)));
  };

  std::vector<PairRun> runs(budget);
  detail::parallel_for(budget, resolve_workers(tuning.workers), [&](std::size_t r) {
    RngStream rng = RngStream::derive(seed, r);
    auto [x, y] = sample_pair(dim, rng, tuning.radius);
    std::vector<double> start(x.coords().begin(), x.coords().end());
    start.insert(start.end(), y.coords().begin(), y.coords().end());
    PatternSearchOutcome o = maximize_by_pattern_search(std::move(start), objective, project, search_options(tuning, tol));
    runs[r] = PairRun{std::move(o.params), o.value, o.evaluations, o.rejected};
  });
  return reduce_pair_runs(runs, dim);
}

}  // namespace

void SearchConfig::validate() const {
  if (restarts < 1) throw DomainError("restarts must be >= 1");
  if (iters_per_restart < 1) throw DomainError("iters_per_restart must be >= 1");
  if (dim < 1) throw DomainError("dim must be >= 1");
  require_valid_radius(radius);
  if (!(step_init > 0.0)) throw DomainError("step_init must be > 0");
  if (!(step_shrink > 0.0 && step_shrink < 1.0)) throw DomainError("step_shrink must lie in (0, 1)");
  if (!(violation_threshold > 0.0)) throw DomainError("violation_threshold must be > 0");
}

SearchResult violation_search(const Norm& norm, InequalityId objective, const SearchConfig& config,
                              const Tolerances& tol) {
  if (!objective_allowed(objective)) {
    throw DomainError(std::string(to_string(objective)) + " is not a search objective");
  }
  config.validate();
  require_dim(norm, config.dim);

  const std::size_t dim = config.dim;
  const Layout layout{dim, objective != InequalityId::AlphaBeta};
  const bool lorch = objective == InequalityId::Lorch;
  const auto pair_project = pair_projection(dim, config.radius);

  struct Run {
    std::vector<double> params;
    double gamma_sign = 1.0;
    double value = -std::numeric_limits<double>::infinity();
    std::size_t evaluations = 0;
    std::size_t rejected = 0;
  };
  std::vector<Run> runs(config.restarts);

  auto aux_values = [&](std::span<const double> p, double gamma_sign) {
    std::pair<std::optional<double>, std::optional<double>> aux;
    if (objective == InequalityId::NOrdering) aux.first = p[2 * dim];
    if (lorch) aux.second = gamma_sign * std::exp(p[2 * dim]);
    return aux;
  };

  detail::parallel_for(config.restarts, resolve_workers(config.workers), [&](std::size_t r) {
    RngStream rng = RngStream::derive(config.seed, r);
    auto [x, y] = sample_pair(dim, rng, config.radius);
    std::vector<double> start(x.coords().begin(), x.coords().end());
    start.insert(start.end(), y.coords().begin(), y.coords().end());
    double gamma_sign = 1.0;
    if (objective == InequalityId::NOrdering) start.push_back(*draw_t(objective, TStrategy::Uniform, rng));
    if (lorch) {
      const double g = *draw_gamma(objective, GammaStrategy::LogUniformSigned, rng);
      gamma_sign = g < 0 ? -1.0 : 1.0;
      start.push_back(std::log(std::abs(g)));
    }

    const SearchProjection project = [&](std::vector<double>& p) {
      if (!pair_project(p)) return false;
      if (objective == InequalityId::NOrdering) p[2 * dim] = std::clamp(p[2 * dim], 0.0, 1.0);
      if (lorch) {
        p[2 * dim] = std::clamp(p[2 * dim], kLogGammaMin, kLogGammaMax);
        const double nx = norm.eval(layout.x(p));
        const double ny = norm.eval(layout.y(p));
        if (!(ny > 0.0) || !(nx > 0.0)) return false;
        const double factor = nx / ny;
        for (std::size_t i = 0; i < dim; ++i) p[dim + i] *= factor;
      }
      return true;
    };
    const SearchObjective violation = [&](std::span<const double> p) -> std::optional<double> {
      const auto [t, gamma] = aux_values(p, gamma_sign);
      try {
        return -evaluate_inequality(objective, norm, to_vector(layout.x(p)), to_vector(layout.y(p)), t, gamma, tol)
                    .slack;
      } catch (const DomainError&) {
        return std::nullopt;
      }
    };

    PatternSearchOutcome o =
        maximize_by_pattern_search(std::move(start), violation, project, search_options(config, tol));
    runs[r] = Run{std::move(o.params), gamma_sign, o.value, o.evaluations, o.rejected};
  });

  std::size_t best = 0;
  std::size_t evaluations = 0;
  std::size_t skipped = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    evaluations += runs[r].evaluations;
    skipped += runs[r].rejected;
    if (runs[r].value > runs[best].value) best = r;
  }

  const Run& b = runs[best];
  const auto [t, gamma] = aux_values(b.params, b.gamma_sign);
  InequalityReport rep = evaluate_inequality(objective, norm, to_vector(layout.x(b.params)),
                                             to_vector(layout.y(b.params)), t, gamma, tol);
  SearchResult out{objective, std::max(0.0, -rep.slack), rep.slack, std::move(rep.witness), evaluations,
                   config.restarts, skipped, config.seed};
  return out;
}

std::optional<double> dunkl_williams_ratio(const Norm& norm, const Vector& x, const Vector& y,
                                           const Tolerances& tol) {
  const double nx = norm(x);
  const double ny = norm(y);
  if (!(nx > 0.0) || !(ny > 0.0)) return std::nullopt;
  const double sep = norm(x - y);
  if (sep < tol.dw_separation_floor * (nx + ny)) return std::nullopt;
  return angular_distance(norm, x, nx, y, ny) * (nx + ny) / sep;
}

double parallelogram_defect(const Norm& norm, const Vector& x, const Vector& y) {
  const double nx = norm(x);
  const double ny = norm(y);
  const double s = norm(x + y);
  const double d = norm(x - y);
  const double denom = nx * nx + ny * ny;
  if (denom == 0.0) return 0.0;
  return std::abs(s * s + d * d - 2.0 * nx * nx - 2.0 * ny * ny) / denom;
}

PairEstimate dw_constant_estimate(const Norm& norm, std::size_t dim, std::size_t budget, std::uint64_t seed,
                                  const SearchConfig& tuning, const Tolerances& tol) {
  return pair_search(norm, dim, budget, seed, tuning, tol,
                     [&](const Vector& x, const Vector& y) { return dunkl_williams_ratio(norm, x, y, tol); });
}

PairEstimate parallelogram_defect_search(const Norm& norm, std::size_t dim, std::size_t budget,
                                         std::uint64_t seed, const SearchConfig& tuning) {
  return pair_search(norm, dim, budget, seed, tuning, kDefaultTolerances,
                     [&](const Vector& x, const Vector& y) -> std::optional<double> {
                       return parallelogram_defect(norm, x, y);
                     });
}

std::string_view to_string(Verdict v) { return v == Verdict::Violated ? "VIOLATED" : "CONSISTENT"; }

DetectionVerdict detect_inner_product(const Norm& norm, const SearchConfig& config, const Tolerances& tol) {
  const auto started = std::chrono::steady_clock::now();
  config.validate();
  require_dim(norm, config.dim);

  DetectionVerdict v{Verdict::Consistent, {},
                     parallelogram_defect_search(norm, config.dim, config.restarts, config.seed, config),
                     dw_constant_estimate(norm, config.dim, config.restarts, config.seed, config, tol),
                     config, false, 0.0};
  for (InequalityId id : kCharacterizingInequalities) {
    SearchResult r = violation_search(norm, id, config, tol);
    if (r.best_violation > config.violation_threshold) v.verdict = Verdict::Violated;
    v.per_objective.emplace(id, std::move(r));
  }
  v.search_insufficient = v.verdict == Verdict::Consistent && v.parallelogram.value > tol.parallelogram_flag;
  v.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return v;
}

}  // namespace normgeo
