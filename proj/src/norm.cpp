#include "normgeo/norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "normgeo/errors.hpp"

namespace normgeo {

Exponent::Exponent(double p) : p_(p), infinite_(false) {
  if (std::isinf(p) && p > 0) {
    infinite_ = true;
    p_ = 0.0;
  } else if (!(p >= 1.0) || !std::isfinite(p)) {
    throw InvalidNormError("exponent p must lie in [1, inf], got " + std::to_string(p));
  }
}

double Exponent::value() const noexcept {
  return infinite_ ? std::numeric_limits<double>::infinity() : p_;
}

NormSpec NormSpec::lp(Exponent p, std::size_t dim) {
  NormSpec s;
  s.kind = NormKind::Lp;
  s.p = p;
  s.dim = dim;
  return s;
}

NormSpec NormSpec::weighted_lp(Exponent p, std::vector<double> weights) {
  NormSpec s;
  s.kind = NormKind::WeightedLp;
  s.p = p;
  s.dim = weights.size();
  s.weights = std::move(weights);
  return s;
}

NormSpec NormSpec::quadratic(SquareMatrix gram) {
  NormSpec s;
  s.kind = NormKind::Quadratic;
  s.dim = gram.size();
  s.gram = std::move(gram);
  return s;
}

Norm::Norm(NormSpec spec, const Tolerances& tol) : spec_(std::move(spec)) {
  if (spec_.dim == 0) throw InvalidNormError("norm dimension must be >= 1");
  switch (spec_.kind) {
    case NormKind::Lp:
      break;
    case NormKind::WeightedLp: {
      if (spec_.weights.size() != spec_.dim) {
        throw InvalidNormError("weights length " + std::to_string(spec_.weights.size()) +
                               " does not match dim " + std::to_string(spec_.dim));
      }
      coordinate_scale_.reserve(spec_.dim);
      for (double w : spec_.weights) {
        if (!(w > 0.0) || !std::isfinite(w)) throw InvalidNormError("weights must be finite and > 0");
        // ||x|| = (Σ w|x|^p)^(1/p) = ||diag(w^(1/p)) x||_p; w^(1/inf) = 1.
        coordinate_scale_.push_back(spec_.p.is_infinite() ? 1.0 : std::pow(w, 1.0 / spec_.p.value()));
      }
      break;
    }
    case NormKind::Quadratic: {
      if (!spec_.gram || spec_.gram->size() != spec_.dim) {
        throw InvalidNormError("quadratic norm needs a dim x dim Gram matrix");
      }
      GramValidation v = gram_validate(*spec_.gram, tol);
      if (!v.valid) throw InvalidNormError("Gram matrix rejected: " + v.reason);
      factor_ = std::move(v.factor);
      break;
    }
  }
}

namespace {

double lp_rescaled(std::span<const double> x, const std::vector<double>* scale, const Exponent& p) {
  auto coord = [&](std::size_t i) {
    return scale ? std::abs(x[i] * (*scale)[i]) : std::abs(x[i]);
  };
  const std::size_t n = x.size();
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, coord(i));
  if (m == 0.0 || p.is_infinite()) return m;

  const double pv = p.value();
  if (pv == 1.0) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += coord(i);
    return sum;
  }
  double sum = 0.0;
  if (pv == 2.0) {
    for (std::size_t i = 0; i < n; ++i) {
      const double r = coord(i) / m;
      sum += r * r;
    }
    return m * std::sqrt(sum);
  }
  for (std::size_t i = 0; i < n; ++i) sum += std::pow(coord(i) / m, pv);
  return m * std::pow(sum, 1.0 / pv);
}

}  // namespace

double Norm::eval(std::span<const double> x) const {
  if (x.size() != spec_.dim) {
    throw DomainError("dimension mismatch: norm has dim " + std::to_string(spec_.dim) +
                      ", vector has " + std::to_string(x.size()));
  }
  if (std::all_of(x.begin(), x.end(), [](double c) { return c == 0.0; })) return 0.0;
  switch (spec_.kind) {
    case NormKind::Lp:
      return lp_rescaled(x, nullptr, spec_.p);
    case NormKind::WeightedLp:
      return lp_rescaled(x, &coordinate_scale_, spec_.p);
    case NormKind::Quadratic:
      return factor_->quadratic_norm(x);
  }
  return 0.0;
}

double Norm::operator()(const Vector& x) const { return eval(x.coords()); }

std::string Norm::label() const {
  std::ostringstream os;
  auto p_text = [&] {
    return spec_.p.is_infinite() ? std::string("inf") : (std::ostringstream() << spec_.p.value()).str();
  };
  switch (spec_.kind) {
    case NormKind::Lp:
      os << "lp(p=" << p_text() << ",dim=" << spec_.dim << ")";
      break;
    case NormKind::WeightedLp:
      os << "weighted_lp(p=" << p_text() << ",dim=" << spec_.dim << ")";
      break;
    case NormKind::Quadratic:
      os << "quadratic(dim=" << spec_.dim << ")";
      break;
  }
  return os.str();
}

void require_valid_radius(RadiusRange radius) {
  if (!(radius.lo > 0.0) || !(radius.lo <= radius.hi) || !std::isfinite(radius.hi)) {
    throw DomainError("radius range must satisfy 0 < lo <= hi < inf");
  }
}

Vector sample_vector(std::size_t dim, RngStream& rng, RadiusRange radius) {
  if (dim == 0) throw DomainError("dim must be >= 1");
  require_valid_radius(radius);
  std::vector<double> dir(dim);
  double len = 0.0;
  do {
    for (double& c : dir) c = rng.standard_normal();
    len = Vector(dir).euclidean_norm();
  } while (len == 0.0);
  const double r = rng.log_uniform(radius.lo, radius.hi);
  for (double& c : dir) c = c / len * r;
  return Vector(std::move(dir));
}

std::pair<Vector, Vector> sample_pair(std::size_t dim, RngStream& rng, RadiusRange radius) {
  Vector x = sample_vector(dim, rng, radius);
  Vector y = sample_vector(dim, rng, radius);
  return {std::move(x), std::move(y)};
}

AxiomReport validate_norm_axioms(const Norm& norm, std::size_t trials, std::uint64_t seed, double tol) {
  if (trials == 0) throw DomainError("trials must be >= 1");
  AxiomReport rep;
  rep.trials = trials;
  rep.seed = seed;
  rep.tol = tol;
  rep.worst_positivity = std::numeric_limits<double>::infinity();
  rep.worst_triangle_slack = std::numeric_limits<double>::infinity();

  RngStream rng(seed);
  const RadiusRange radius{1e-3, 1e3};
  for (std::size_t i = 0; i < trials; ++i) {
    auto [x, y] = sample_pair(norm.dim(), rng, radius);
    const double lambda = rng.sign() * rng.log_uniform(1e-3, 1e3);
    const double nx = norm(x);
    const double ny = norm(y);

    const double hom = std::abs(norm(x.scaled(lambda)) - std::abs(lambda) * nx) / (std::abs(lambda) * nx);
    rep.worst_homogeneity_defect = std::max(rep.worst_homogeneity_defect, hom);

    const double tri = (nx + ny - norm(x + y)) / (nx + ny);
    rep.worst_triangle_slack = std::min(rep.worst_triangle_slack, tri);

    rep.worst_positivity = std::min({rep.worst_positivity, nx, ny});
  }
  rep.passed = rep.worst_triangle_slack >= -tol && rep.worst_homogeneity_defect <= tol &&
               rep.worst_positivity >= 0.0;
  return rep;
}

}  // namespace normgeo
