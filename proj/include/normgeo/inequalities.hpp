#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "normgeo/config.hpp"
#include "normgeo/norm.hpp"

namespace normgeo {

enum class InequalityId {
  MaligrandaUpper,
  MaligrandaLower,
  AngularLower,
  AngularUpper,
  MasseraSchaffer,
  DunklWilliams4,
  NOrdering,
  AlphaBeta,
  Lorch,
};

inline constexpr std::array<InequalityId, 9> kAllInequalities = {
    InequalityId::MaligrandaUpper, InequalityId::MaligrandaLower, InequalityId::AngularLower,
    InequalityId::AngularUpper,    InequalityId::MasseraSchaffer, InequalityId::DunklWilliams4,
    InequalityId::NOrdering,       InequalityId::AlphaBeta,       InequalityId::Lorch,
};

inline constexpr std::array<InequalityId, 6> kUniversalInequalities = {
    InequalityId::MaligrandaUpper, InequalityId::MaligrandaLower, InequalityId::AngularLower,
    InequalityId::AngularUpper,    InequalityId::MasseraSchaffer, InequalityId::DunklWilliams4,
};

/// The three inequalities that hold exactly when the norm comes from an
/// inner product.
inline constexpr std::array<InequalityId, 3> kCharacterizingInequalities = {
    InequalityId::NOrdering, InequalityId::AlphaBeta, InequalityId::Lorch};

/// "MALIGRANDA_UPPER", ...
std::string_view to_string(InequalityId id);
/// Inverse of to_string; nullopt for unknown names.
std::optional<InequalityId> inequality_from_string(std::string_view name);

/// True for the six inequalities that hold in every normed space.
bool is_universal(InequalityId id);
bool needs_t(InequalityId id);
bool needs_gamma(InequalityId id);

struct Witness {
  Vector x;
  Vector y;
  std::optional<double> t;
  std::optional<double> gamma;
};

/// Provenance of a report picked out of a sampled batch.
struct BatchMeta {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t trial_index = 0;
};

/// One inequality instance. slack = rhs - lhs; negative slack is a violation.
struct InequalityReport {
  InequalityId id;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  Witness witness;
  bool universal = false;
  std::optional<BatchMeta> batch;

  /// 1 + |lhs| + |rhs|, the scale universal slacks are measured against.
  double scale() const;
};

/// Evaluates `id` on the given inputs. `t` must be given (in [0, 1]) iff
/// the id is NOrdering; `gamma` (nonzero) iff Lorch, which additionally
/// requires ||x|| = ||y|| to tol.lorch_equal_norm_relative; this function
/// never rescales. Throws DomainError on any precondition failure.
InequalityReport evaluate_inequality(InequalityId id, const Norm& norm, const Vector& x, const Vector& y,
                                     std::optional<double> t = std::nullopt,
                                     std::optional<double> gamma = std::nullopt,
                                     const Tolerances& tol = kDefaultTolerances);

/// slack >= -tol.universal_slack_relative * scale.
bool holds_within_tolerance(const InequalityReport& report, const Tolerances& tol = kDefaultTolerances);

enum class TStrategy {
  Uniform,    // t ~ U[0, 1]
  Endpoints,  // t ∈ {0, 1} with equal probability
};

enum class GammaStrategy {
  LogUniformSigned,  // |γ| log-uniform on [1/8, 8], random sign
  Positive,          // |γ| log-uniform on [1/8, 8]
};

inline constexpr double kGammaMin = 0.125;
inline constexpr double kGammaMax = 8.0;

struct BatchOptions {
  RadiusRange radius{0.25, 4.0};
  TStrategy t_strategy = TStrategy::Uniform;
  GammaStrategy gamma_strategy = GammaStrategy::LogUniformSigned;
  // 0 selects std::thread::hardware_concurrency().
  unsigned workers = 1;
};

/// Trials are grouped in fixed-size chunks, each with its own stream
/// derived from `seed`, so the result does not depend on `workers`.
inline constexpr std::size_t kBatchChunk = 4096;

/// Report with the smallest slack over `trials` sampled inputs (ties go to
/// the lowest trial index). Lorch pairs are made equal-norm by rescaling y.
InequalityReport batch_min_slack(InequalityId id, const Norm& norm, std::size_t trials, std::uint64_t seed,
                                 const BatchOptions& options = {}, const Tolerances& tol = kDefaultTolerances);

/// Draws the auxiliary variable for `id` (t or γ) under the given strategy.
std::optional<double> draw_t(InequalityId id, TStrategy strategy, RngStream& rng);
std::optional<double> draw_gamma(InequalityId id, GammaStrategy strategy, RngStream& rng);

/// y rescaled to have the same norm as x.
Vector rescale_to_norm_of(const Norm& norm, const Vector& y, double target_norm);

unsigned resolve_workers(unsigned requested);

}  // namespace normgeo
