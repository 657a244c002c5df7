#include <doctest.h>

#include <cmath>

#include "normgeo/errors.hpp"
#include "normgeo/functional.hpp"
#include "test_support.hpp"

using namespace normgeo;
using namespace normgeo::testing;

namespace {
const Vector kExX{0, 2};
const Vector kExY{2, -1};
}  // namespace

TEST_CASE("n_eval on the l1 example pair") {
  const Norm l1 = lp(1, 2);
  // (0,2) + 0.5 (2,-1) = (1, 1.5); (2,-1) + 0.5 (0,2) = (2, 0)
  CHECK(n_eval(l1, kExX, kExY, 0.5) == 2.5);
  CHECK(n_eval(l1, kExY, kExX, 0.5) == 2.0);
  CHECK(n_eval(l1, kExX, kExY, 0.5) == ref_l1(ref_axpy({0, 2}, 0.5, {2, -1})));
  for (const Norm& n : norm_zoo(2)) CHECK(n_eval(n, kExX, kExY, 0.0) == n(kExX));
  CHECK_THROWS_AS(n_eval(l1, kExX, Vector{1, 2, 3}, 0.5), DomainError);
}

TEST_CASE("n_curve grid contract") {
  const Norm l2 = lp(2, 2);
  const auto c = n_curve(l2, Vector{1, 0}, Vector{0, 1}, -1, 1, 3);
  REQUIRE(c.size() == 3);
  CHECK(c[0].xy.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(c[1].xy.value == 1.0);
  CHECK(c[2].xy.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(c.front().t() == -1.0);
  CHECK(c.back().t() == 1.0);

  const auto e = n_curve(lp(1, 2), kExX, kExY, 0, 1, 101);
  CHECK(e[50].t() == 0.5);
  CHECK(e[50].xy.value == 2.5);
  CHECK(e[50].yx.value == 2.0);
  CHECK(e[50].xy.value > e[50].yx.value);

  const auto third = n_curve(l2, kExX, kExY, -0.3, 0.7, 7);
  CHECK(third.front().t() == -0.3);
  CHECK(third.back().t() == 0.7);

  CHECK_THROWS_AS(n_curve(l2, kExX, kExY, 1, 1, 5), DomainError);
  CHECK_THROWS_AS(n_curve(l2, kExX, kExY, 0, 1, 1), DomainError);
}

TEST_CASE("one-sided derivatives at a kink") {
  // n(t) = |1 - t| for x=(1,0), y=(-1,0) under l1.
  const Norm l1 = lp(1, 2);
  const auto right = one_sided_derivative(l1, Vector{1, 0}, Vector{-1, 0}, 1.0, Side::Right);
  const auto left = one_sided_derivative(l1, Vector{1, 0}, Vector{-1, 0}, 1.0, Side::Left);
  CHECK(right.value == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(left.value == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(right.step_sequence_floor > 0.0);
}

TEST_CASE("one-sided derivatives of a smooth curve") {
  // d/dt sqrt(1+t²) at 0 is 0; at t = 0.75 it is 0.75 / 1.25 = 0.6.
  const Norm l2 = lp(2, 2);
  for (Side s : {Side::Left, Side::Right}) {
    CHECK(std::abs(one_sided_derivative(l2, Vector{1, 0}, Vector{0, 1}, 0.0, s).value) < 1e-6);
    CHECK(one_sided_derivative(l2, Vector{1, 0}, Vector{0, 1}, 0.75, s).value == doctest::Approx(0.6).epsilon(1e-6));
  }
}

TEST_CASE("derivative non-convergence is reported") {
  Tolerances strict;
  strict.derivative_agreement = 0.0;
  CHECK_THROWS_AS(one_sided_derivative(lp(2, 2), Vector{1, 0}, Vector{0.3, 1}, 0.2, Side::Right, strict),
                  ConvergenceError);
}

TEST_CASE("property: right derivatives are nondecreasing and dominate left ones") {
  RngStream rng(31);
  for (const Norm& n : norm_zoo(3)) {
    for (int i = 0; i < 20; ++i) {
      const auto [x, y] = sample_pair(3, rng, {0.5, 2.0});
      double prev = -std::numeric_limits<double>::infinity();
      for (double t = -2.0; t <= 2.0; t += 0.37) {
        const double r = one_sided_derivative(n, x, y, t, Side::Right).value;
        const double l = one_sided_derivative(n, x, y, t, Side::Left).value;
        CHECK(r >= l - 1e-6);
        CHECK(prev <= r + 1e-5);
        prev = r;
      }
    }
  }
}

TEST_CASE("convexity_defect") {
  const double grid3[] = {-1.0, 0.0, 1.0};
  CHECK(convexity_defect(lp(2, 2), Vector{1, 0}, Vector{0, 1}, grid3) ==
        doctest::Approx(1.0 - std::sqrt(2.0)).epsilon(1e-15));
  for (const Norm& n : norm_zoo(2)) CHECK(convexity_defect(n, kExX, Vector::zeros(2), grid3) == 0.0);

  const double unsorted[] = {0.0, -1.0, 1.0};
  CHECK_THROWS_AS(convexity_defect(lp(2, 2), kExX, kExY, unsorted), DomainError);
  const double short_grid[] = {0.0, 1.0};
  CHECK_THROWS_AS(convexity_defect(lp(2, 2), kExX, kExY, short_grid), DomainError);

  RngStream rng(12);
  const auto grid = uniform_grid(-2.0, 2.0, 101);
  const Norm inf = linf(4);
  for (int i = 0; i < 200; ++i) {
    const auto [x, y] = sample_pair(4, rng, {0.25, 4.0});
    CHECK(convexity_defect(inf, x, y, grid) <= 1e-12);
  }
}

TEST_CASE("reflection identity") {
  CHECK(reflection_identity_defect(lp(1, 2), kExX, kExY, 0.5) == 0.0);
  RngStream rng(3);
  const auto [x, y] = sample_pair(3, rng, {0.5, 2});
  const Norm l3 = lp(3, 3);
  CHECK(reflection_identity_defect(l3, x, y, -2.7) <= 1e-15 * n_eval(l3, x, y, -2.7));
  SquareMatrix g(2);
  g(0, 0) = 2;
  g(1, 1) = 1;
  const Norm q(NormSpec::quadratic(g));
  CHECK(reflection_identity_defect(q, kExX, kExY, 1.0) <= 1e-15 * n_eval(q, kExX, kExY, 1.0));
}

TEST_CASE("reciprocal order agreement") {
  const Norm l1 = lp(1, 2);
  CHECK(reciprocal_order_agreement(l1, kExX, kExY, 0.5));
  CHECK(reciprocal_order_agreement(l1, kExX, kExY, 2.0));
  CHECK(reciprocal_order_agreement(lp(2, 2), kExX, kExY, 1.0));
  CHECK_THROWS_AS(reciprocal_order_agreement(l1, kExX, kExY, 0.0), DomainError);

  RngStream rng(77);
  std::size_t agreed = 0, total = 0;
  for (std::size_t dim : {2u, 3u, 5u}) {
    for (const Norm& n : norm_zoo(dim)) {
      for (int i = 0; i < 500; ++i) {
        const auto [x, y] = sample_pair(dim, rng, {0.25, 4});
        const double t = rng.sign() * rng.log_uniform(1e-3, 1e3);
        agreed += reciprocal_order_agreement(n, x, y, t);
        ++total;
      }
    }
  }
  CHECK(agreed == total);
}

TEST_CASE("quadratic difference identity") {
  SquareMatrix g(2);
  g(0, 0) = 2;
  g(1, 1) = 1;
  const Norm q(NormSpec::quadratic(g));
  // n² difference 2.25 - 1.5 = 0.75 = (2 - 1)(1 - 0.25)
  CHECK(quadratic_difference_defect(q, Vector{1, 0}, Vector{0, 1}, 0.5) <= 1e-15);
  CHECK(quadratic_difference_defect(g, Vector{1, 0}, Vector{0, 1}, 0.5) <= 1e-15);

  RngStream rng(6);
  const auto [x, y] = sample_pair(2, rng, {0.5, 3});
  const double n1xy = n_eval(q, x, y, 1.0), n1yx = n_eval(q, y, x, 1.0);
  CHECK(n1xy * n1xy - n1yx * n1yx == doctest::Approx(0.0).epsilon(1e-12));
  // equal norms: (1, 0) and (0, sqrt 2) both have norm sqrt 2
  const Vector a{1, 0}, b{0, std::sqrt(2.0)};
  for (double t : {-3.0, 0.1, 0.5, 2.0}) {
    const double d = n_eval(q, a, b, t) * n_eval(q, a, b, t) - n_eval(q, b, a, t) * n_eval(q, b, a, t);
    CHECK(std::abs(d) <= 1e-12 * (1 + t * t));
    CHECK(quadratic_difference_defect(q, a, b, t) <= 1e-12 * (1 + t * t));
  }

  CHECK_THROWS_AS(quadratic_difference_defect(lp(2, 2), a, b, 0.5), DomainError);
  CHECK_THROWS_AS(quadratic_difference_defect(SquareMatrix({{1, 2}, {2, 1}}), a, b, 0.5), InvalidNormError);
}

TEST_CASE("property: quadratic norms order n_{x,y} below n_{y,x} when ||x|| <= ||y||") {
  std::mt19937_64 gen(91);
  RngStream rng(92);
  for (std::size_t dim = 2; dim <= 6; ++dim) {
    const Norm q = random_quadratic(dim, gen);
    for (int i = 0; i < 300; ++i) {
      auto [x, y] = sample_pair(dim, rng, {0.25, 4});
      if (q(x) > q(y)) std::swap(x, y);
      const double t = rng.uniform01();
      const double scale = q(x) + q(y);
      CHECK(quadratic_difference_defect(q, x, y, t) <= 1e-9 * (q(x) * q(x) + q(y) * q(y)));
      CHECK(n_eval(q, x, y, t) <= n_eval(q, y, x, t) + 1e-9 * scale);
    }
  }
}

TEST_CASE("property: n(1/n) approaches n(0) monotonically") {
  // With the right derivative at 0 nonnegative, n(h) - n(0) >= 0 and is a
  // product of two nondecreasing factors h and (n(h) - n(0))/h.
  const Norm l1 = lp(1, 2);
  double prev = std::numeric_limits<double>::infinity();
  const double base = n_eval(l1, kExX, kExY, 0.0);
  for (int k = 1; k <= 40; ++k) {
    const double gap = std::abs(n_eval(l1, kExX, kExY, std::ldexp(1.0, -k)) - base);
    CHECK(gap <= prev);
    prev = gap;
  }
  CHECK(prev < 1e-11);
}
