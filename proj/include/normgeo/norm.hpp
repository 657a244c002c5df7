#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "normgeo/config.hpp"
#include "normgeo/gram.hpp"
#include "normgeo/rng.hpp"
#include "normgeo/vector.hpp"

namespace normgeo {

enum class NormKind { Lp, WeightedLp, Quadratic };

/// Exponent p in [1, +inf]. Infinity is a distinguished state, not a large
/// double, so the max formula is used exactly.
class Exponent {
 public:
  explicit Exponent(double p);
  static Exponent infinity() { return Exponent(); }

  bool is_infinite() const noexcept { return infinite_; }
  /// Finite value; +inf when is_infinite().
  double value() const noexcept;

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  Exponent() : p_(0.0), infinite_(true) {}
  double p_;
  bool infinite_;
};

/// Unvalidated description of a norm. Turn it into a Norm to use it.
struct NormSpec {
  NormKind kind = NormKind::Lp;
  Exponent p = Exponent(2.0);
  std::vector<double> weights;          // WeightedLp only
  std::optional<SquareMatrix> gram;     // Quadratic only
  std::size_t dim = 0;

  static NormSpec lp(Exponent p, std::size_t dim);
  static NormSpec weighted_lp(Exponent p, std::vector<double> weights);
  static NormSpec quadratic(SquareMatrix gram);
};

/// A validated norm on R^dim. Construction checks the NormSpec invariants
/// (and certifies Quadratic Gram matrices), so every Norm value is usable.
class Norm {
 public:
  /// Throws InvalidNormError.
  explicit Norm(NormSpec spec, const Tolerances& tol = kDefaultTolerances);

  const NormSpec& spec() const noexcept { return spec_; }
  std::size_t dim() const noexcept { return spec_.dim; }
  NormKind kind() const noexcept { return spec_.kind; }

  /// ||x||. Throws DomainError on dimension mismatch.
  double operator()(const Vector& x) const;
  double eval(std::span<const double> x) const;

  /// Short human-readable label, e.g. "lp(p=1,dim=2)".
  std::string label() const;

 private:
  NormSpec spec_;
  std::optional<GramFactor> factor_;
  // Per-coordinate multipliers so that WeightedLp is ||diag(w^(1/p)) x||_p.
  std::vector<double> coordinate_scale_;
};

// --- axiom self-test -------------------------------------------------------

struct AxiomReport {
  std::size_t trials = 0;
  double worst_homogeneity_defect = 0.0;  // relative |‖λx‖ − |λ|‖x‖|
  double worst_triangle_slack = 0.0;      // relative ‖x‖+‖y‖−‖x+y‖
  double worst_positivity = 0.0;          // min ‖x‖ over sampled nonzero x
  bool passed = false;
  std::uint64_t seed = 0;
  double tol = 0.0;
};

/// Samples `trials` (x, y, λ) triples and records the worst defects.
AxiomReport validate_norm_axioms(const Norm& norm, std::size_t trials, std::uint64_t seed,
                                 double tol = kDefaultTolerances.axiom_relative);

// --- sampling ----------------------------------------------------------------

struct RadiusRange {
  double lo = 0.25;
  double hi = 4.0;
};

/// Nonzero vector with isotropic direction and log-uniform Euclidean length.
Vector sample_vector(std::size_t dim, RngStream& rng, RadiusRange radius);

/// Two independent sample_vector draws. Throws DomainError on a bad range.
std::pair<Vector, Vector> sample_pair(std::size_t dim, RngStream& rng, RadiusRange radius);

void require_valid_radius(RadiusRange radius);

}  // namespace normgeo
