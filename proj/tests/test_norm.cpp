#include <doctest.h>

#include <cmath>
#include <limits>

#include "normgeo/errors.hpp"
#include "normgeo/norm.hpp"
#include "test_support.hpp"

using namespace normgeo;
using namespace normgeo::testing;

TEST_CASE("norm_eval on the family formulas") {
  CHECK(lp(1, 2)(Vector{0, 2}) == 2.0);
  CHECK(lp(2, 2)(Vector{3, 4}) == 5.0);
  CHECK(linf(3)(Vector{-7, 2, 5}) == 7.0);

  SquareMatrix g(2);
  g(0, 0) = 2;
  g(1, 1) = 1;
  const Norm q(NormSpec::quadratic(g));
  CHECK(q(Vector{1, 0}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  const Norm w(NormSpec::weighted_lp(Exponent(2.0), {4.0, 1.0}));
  CHECK(w(Vector{1, 1}) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
  const Norm w1(NormSpec::weighted_lp(Exponent(1.0), {4.0, 1.0}));
  CHECK(w1(Vector{1, -3}) == 7.0);
}

TEST_CASE("zero vector has norm exactly zero") {
  for (const Norm& n : norm_zoo(3)) CHECK(n(Vector::zeros(3)) == 0.0);
}

TEST_CASE("exponent invariants") {
  CHECK_THROWS_AS(Exponent(0.5), InvalidNormError);
  CHECK_THROWS_AS(Exponent(0.999), InvalidNormError);
  CHECK_THROWS_AS(Exponent(std::nan("")), InvalidNormError);
  CHECK(Exponent(std::numeric_limits<double>::infinity()).is_infinite());
  CHECK(Exponent::infinity() == Exponent(std::numeric_limits<double>::infinity()));
}

TEST_CASE("invalid norm specs are rejected at construction") {
  CHECK_THROWS_AS(Norm(NormSpec::lp(Exponent(2.0), 0)), InvalidNormError);
  CHECK_THROWS_AS(Norm(NormSpec::weighted_lp(Exponent(2.0), {1.0, 0.0})), InvalidNormError);
  CHECK_THROWS_AS(Norm(NormSpec::weighted_lp(Exponent(2.0), {1.0, -2.0})), InvalidNormError);
  CHECK_THROWS_AS(Norm(NormSpec::quadratic(SquareMatrix({{1, 2}, {2, 1}}))), InvalidNormError);
  NormSpec mismatched = NormSpec::weighted_lp(Exponent(2.0), {1.0, 1.0});
  mismatched.dim = 3;
  CHECK_THROWS_AS(Norm{mismatched}, InvalidNormError);
}

TEST_CASE("dimension mismatch is a domain error") {
  CHECK_THROWS_AS(lp(2, 2)(Vector{1, 2, 3}), DomainError);
}

TEST_CASE("vectors reject non-finite and empty coordinates") {
  CHECK_THROWS_AS(Vector{std::numeric_limits<double>::infinity()}, DomainError);
  CHECK_THROWS_AS(Vector(std::vector<double>{}), DomainError);
  CHECK_THROWS_AS(Vector{1e308}.scaled(10.0), DomainError);
}

TEST_CASE("large exponents do not overflow") {
  const Norm n = lp(64, 3);
  const double v = n(Vector{1e300, 1e300, 0});
  CHECK(std::isfinite(v));
  CHECK(v == doctest::Approx(1e300 * std::pow(2.0, 1.0 / 64)).epsilon(1e-14));
  CHECK(n(Vector{1e-300, 0, 0}) == 1e-300);
}

TEST_CASE("gram_validate pivots") {
  SUBCASE("positive diagonal") {
    const auto v = gram_validate(SquareMatrix({{2, 0}, {0, 1}}));
    CHECK(v.valid);
    CHECK(v.factor.has_value());
  }
  SUBCASE("indefinite: second pivot is 1 - 4 = -3") {
    const auto v = gram_validate(SquareMatrix({{1, 2}, {2, 1}}));
    CHECK_FALSE(v.valid);
    REQUIRE(v.failed_pivot.has_value());
    CHECK(*v.failed_pivot == 1);
    CHECK(v.pivot_value == -3.0);
    CHECK(v.pivots.front() == 1.0);
  }
  SUBCASE("singular") {
    const auto v = gram_validate(SquareMatrix({{1, 0}, {0, 0}}));
    CHECK_FALSE(v.valid);
    CHECK(*v.failed_pivot == 1);
    CHECK(v.pivot_value == 0.0);
  }
  SUBCASE("asymmetric beyond tolerance") {
    const auto v = gram_validate(SquareMatrix({{2, 1}, {1.001, 2}}));
    CHECK_FALSE(v.valid);
    CHECK_FALSE(v.failed_pivot.has_value());
  }
  SUBCASE("asymmetry within 1e-12 relative is accepted") {
    CHECK(gram_validate(SquareMatrix({{2, 1}, {1 + 1e-14, 2}})).valid);
  }
}

TEST_CASE("axiom self-test") {
  const AxiomReport r = validate_norm_axioms(lp(2, 3), 1000, 11);
  CHECK(r.passed);
  CHECK(r.trials == 1000);
  CHECK(r.worst_positivity > 0.0);
  CHECK(r.worst_triangle_slack >= -1e-9);

  SquareMatrix g(2);
  g(0, 0) = 2;
  g(1, 1) = 1;
  CHECK(validate_norm_axioms(Norm(NormSpec::quadratic(g)), 1000, 3).passed);

  const AxiomReport again = validate_norm_axioms(lp(2, 3), 1000, 11);
  CHECK(again.worst_homogeneity_defect == r.worst_homogeneity_defect);
  CHECK(again.worst_triangle_slack == r.worst_triangle_slack);
  CHECK_THROWS_AS(validate_norm_axioms(lp(2, 3), 0, 1), DomainError);
}

TEST_CASE("sample_pair contract") {
  RngStream a(42), b(42);
  const auto [x1, y1] = sample_pair(2, a, {0.5, 4.0});
  const auto [x2, y2] = sample_pair(2, b, {0.5, 4.0});
  CHECK(x1 == x2);
  CHECK(y1 == y2);

  RngStream rng(5);
  for (int i = 0; i < 2000; ++i) {
    const auto [x, y] = sample_pair(4, rng, {0.5, 4.0});
    CHECK(x.euclidean_norm() >= 0.5 * (1 - 1e-15));
    CHECK(x.euclidean_norm() <= 4.0 * (1 + 1e-15));
    CHECK_FALSE(y.is_zero());
  }
  CHECK_THROWS_AS(sample_pair(2, rng, {0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(sample_pair(2, rng, {2.0, 1.0}), DomainError);
}

TEST_CASE("sampled directions are isotropic") {
  RngStream rng(2024);
  double mean[3] = {0, 0, 0};
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    const Vector v = sample_vector(3, rng, {1.0, 1.0});
    for (int k = 0; k < 3; ++k) mean[k] += v[k] / draws;
  }
  CHECK(std::sqrt(mean[0] * mean[0] + mean[1] * mean[1] + mean[2] * mean[2]) < 0.05);
}

TEST_CASE("property: norm axioms across families") {
  RngStream rng(99);
  for (std::size_t dim : {1u, 2u, 5u, 8u}) {
    for (const Norm& n : norm_zoo(dim)) {
      for (int i = 0; i < 300; ++i) {
        const auto [x, y] = sample_pair(dim, rng, {1e-3, 1e3});
        const double lambda = rng.sign() * rng.log_uniform(1e-3, 1e3);
        const double nx = n(x), ny = n(y);
        CHECK(n(x + y) <= nx + ny + 1e-12 * (nx + ny));
        CHECK(std::abs(n(x.scaled(lambda)) - std::abs(lambda) * nx) <= 1e-12 * std::abs(lambda) * nx);
      }
    }
  }
}

TEST_CASE("property: quadratic norms obey the parallelogram law") {
  std::mt19937_64 gen(17);
  RngStream rng(18);
  for (std::size_t dim = 2; dim <= 6; ++dim) {
    const Norm q = random_quadratic(dim, gen);
    for (int i = 0; i < 500; ++i) {
      const auto [x, y] = sample_pair(dim, rng, {0.1, 10.0});
      const double a = q(x + y), b = q(x - y), nx = q(x), ny = q(y);
      CHECK(std::abs(a * a + b * b - 2 * nx * nx - 2 * ny * ny) <= 1e-9 * (nx * nx + ny * ny));
    }
  }
}

TEST_CASE("property: l2 equals the identity quadratic form") {
  RngStream rng(4);
  for (std::size_t dim = 1; dim <= 8; ++dim) {
    const Norm e = lp(2, dim);
    const Norm q(NormSpec::quadratic(SquareMatrix::identity(dim)));
    for (int i = 0; i < 200; ++i) {
      const Vector x = sample_vector(dim, rng, {1e-6, 1e6});
      CHECK(std::abs(e(x) - q(x)) <= 1e-12 * e(x));
    }
  }
}

TEST_CASE("property: norm evaluation is pure") {
  RngStream rng(8);
  for (const Norm& n : norm_zoo(4)) {
    const Vector x = sample_vector(4, rng, {0.1, 10});
    const double first = n(x);
    for (int i = 0; i < 5; ++i) CHECK(n(x) == first);
  }
}
