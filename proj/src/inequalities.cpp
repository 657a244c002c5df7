#include "normgeo/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "normgeo/distances.hpp"
#include "normgeo/errors.hpp"
#include "normgeo/functional.hpp"
#include "normgeo/parallel.hpp"

namespace normgeo {

namespace {

struct Names {
  InequalityId id;
  std::string_view name;
};

constexpr std::array<Names, 9> kNames = {{
    {InequalityId::MaligrandaUpper, "MALIGRANDA_UPPER"},
    {InequalityId::MaligrandaLower, "MALIGRANDA_LOWER"},
    {InequalityId::AngularLower, "ANGULAR_LOWER"},
    {InequalityId::AngularUpper, "ANGULAR_UPPER"},
    {InequalityId::MasseraSchaffer, "MASSERA_SCHAFFER"},
    {InequalityId::DunklWilliams4, "DUNKL_WILLIAMS_4"},
    {InequalityId::NOrdering, "N_ORDERING"},
    {InequalityId::AlphaBeta, "ALPHA_BETA"},
    {InequalityId::Lorch, "LORCH"},
}};

void require_nonzero(double nx, double ny) {
  if (!(nx > 0.0) || !(ny > 0.0)) throw DomainError("inequality needs nonzero x and y");
}

}  // namespace

std::string_view to_string(InequalityId id) {
  for (const auto& n : kNames)
    if (n.id == id) return n.name;
  return "UNKNOWN";
}

std::optional<InequalityId> inequality_from_string(std::string_view name) {
  for (const auto& n : kNames)
    if (n.name == name) return n.id;
  return std::nullopt;
}

bool is_universal(InequalityId id) {
  return std::find(kUniversalInequalities.begin(), kUniversalInequalities.end(), id) !=
         kUniversalInequalities.end();
}

bool needs_t(InequalityId id) { return id == InequalityId::NOrdering; }
bool needs_gamma(InequalityId id) { return id == InequalityId::Lorch; }

double InequalityReport::scale() const { return 1.0 + std::abs(lhs) + std::abs(rhs); }

bool holds_within_tolerance(const InequalityReport& r, const Tolerances& tol) {
  return r.slack >= -tol.universal_slack_relative * r.scale();
}

InequalityReport evaluate_inequality(InequalityId id, const Norm& norm, const Vector& x, const Vector& y,
                                     std::optional<double> t, std::optional<double> gamma,
                                     const Tolerances& tol) {
  require_same_dim(x, y);
  if (needs_t(id) != t.has_value()) {
    throw DomainError(std::string(to_string(id)) + (t ? " does not take t" : " requires t"));
  }
  if (needs_gamma(id) != gamma.has_value()) {
    throw DomainError(std::string(to_string(id)) + (gamma ? " does not take gamma" : " requires gamma"));
  }

  const double nx = norm(x);
  const double ny = norm(y);
  const double lo = std::min(nx, ny);
  const double hi = std::max(nx, ny);
  double lhs = 0.0;
  double rhs = 0.0;

  switch (id) {
    case InequalityId::MaligrandaUpper:
    case InequalityId::MaligrandaLower: {
      require_nonzero(nx, ny);
      const double unit_sum = norm(x.divided(nx) + y.divided(ny));
      const double refined = nx + ny - (2.0 - unit_sum) * (id == InequalityId::MaligrandaUpper ? lo : hi);
      const double sum = norm(x + y);
      lhs = id == InequalityId::MaligrandaUpper ? sum : refined;
      rhs = id == InequalityId::MaligrandaUpper ? refined : sum;
      break;
    }
    case InequalityId::AngularLower:
    case InequalityId::AngularUpper: {
      require_nonzero(nx, ny);
      const double alpha = angular_distance(norm, x, nx, y, ny);
      const double diff = norm(x - y);
      const double gap = std::abs(nx - ny);
      if (id == InequalityId::AngularLower) {
        lhs = (diff - gap) / lo;
        rhs = alpha;
      } else {
        lhs = alpha;
        rhs = (diff + gap) / hi;
      }
      break;
    }
    case InequalityId::MasseraSchaffer:
      require_nonzero(nx, ny);
      lhs = angular_distance(norm, x, nx, y, ny);
      rhs = 2.0 * norm(x - y) / hi;
      break;
    case InequalityId::DunklWilliams4:
      require_nonzero(nx, ny);
      lhs = angular_distance(norm, x, nx, y, ny);
      rhs = 4.0 * norm(x - y) / (nx + ny);
      break;
    case InequalityId::NOrdering: {
      if (!(*t >= 0.0 && *t <= 1.0)) throw DomainError("N_ORDERING needs t in [0, 1]");
      // Relabel so that ||first|| <= ||second||; ties keep input order.
      const bool swap = nx > ny;
      const Vector& first = swap ? y : x;
      const Vector& second = swap ? x : y;
      lhs = n_eval(norm, first, second, *t);
      rhs = n_eval(norm, second, first, *t);
      break;
    }
    case InequalityId::AlphaBeta:
      require_nonzero(nx, ny);
      lhs = angular_distance(norm, x, nx, y, ny);
      rhs = skew_angular_distance(norm, x, nx, y, ny);
      break;
    case InequalityId::Lorch: {
      const double g = *gamma;
      if (g == 0.0 || !std::isfinite(g)) throw DomainError("LORCH needs finite gamma != 0");
      if (std::abs(nx - ny) > tol.lorch_equal_norm_relative * hi) {
        throw DomainError("LORCH needs ||x|| = ||y||");
      }
      lhs = norm(x + y);
      rhs = norm(x.scaled(g) + y.scaled(1.0 / g));
      break;
    }
  }

  return InequalityReport{id, lhs, rhs, rhs - lhs, Witness{x, y, t, gamma}, is_universal(id), std::nullopt};
}

std::optional<double> draw_t(InequalityId id, TStrategy strategy, RngStream& rng) {
  if (!needs_t(id)) return std::nullopt;
  switch (strategy) {
    case TStrategy::Uniform:
      return rng.uniform01();
    case TStrategy::Endpoints:
      return (rng.next_u64() >> 63) ? 1.0 : 0.0;
  }
  return std::nullopt;
}

std::optional<double> draw_gamma(InequalityId id, GammaStrategy strategy, RngStream& rng) {
  if (!needs_gamma(id)) return std::nullopt;
  const double magnitude = rng.log_uniform(kGammaMin, kGammaMax);
  if (strategy == GammaStrategy::Positive) return magnitude;
  return rng.sign() * magnitude;
}

Vector rescale_to_norm_of(const Norm& norm, const Vector& y, double target_norm) {
  const double ny = norm(y);
  if (!(ny > 0.0)) throw DomainError("cannot rescale a zero vector");
  return y.scaled(target_norm / ny);
}

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

InequalityReport batch_min_slack(InequalityId id, const Norm& norm, std::size_t trials, std::uint64_t seed,
                                 const BatchOptions& options, const Tolerances& tol) {
  if (trials == 0) throw DomainError("trials must be >= 1");
  require_valid_radius(options.radius);

  const std::size_t chunks = (trials + kBatchChunk - 1) / kBatchChunk;
  std::vector<std::optional<InequalityReport>> best(chunks);

  auto run_chunk = [&](std::size_t c) {
    RngStream rng = RngStream::derive(seed, c);
    const std::size_t begin = c * kBatchChunk;
    const std::size_t end = std::min(trials, begin + kBatchChunk);
    for (std::size_t i = begin; i < end; ++i) {
      auto [x, y] = sample_pair(norm.dim(), rng, options.radius);
      const auto t = draw_t(id, options.t_strategy, rng);
      const auto gamma = draw_gamma(id, options.gamma_strategy, rng);
      if (id == InequalityId::Lorch) y = rescale_to_norm_of(norm, y, norm(x));
      InequalityReport rep = evaluate_inequality(id, norm, x, y, t, gamma, tol);
      if (!best[c] || rep.slack < best[c]->slack) {
        rep.batch = BatchMeta{trials, seed, i};
        best[c] = std::move(rep);
      }
    }
  };

  detail::parallel_for(chunks, resolve_workers(options.workers), run_chunk);

  // Chunk order reduction; strict < keeps the lowest trial index on ties.
  std::optional<InequalityReport> worst;
  for (auto& b : best) {
    if (!worst || b->slack < worst->slack) worst = std::move(b);
  }
  return std::move(*worst);
}

}  // namespace normgeo
