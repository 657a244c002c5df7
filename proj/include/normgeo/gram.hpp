#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "normgeo/config.hpp"

namespace normgeo {

/// Dense square matrix, row-major.
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  /// Throws DomainError unless `rows` is non-empty and square.
  explicit SquareMatrix(const std::vector<std::vector<double>>& rows);

  static SquareMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }

  std::vector<std::vector<double>> rows() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

struct GramValidation;

/// Succeeds iff `gram` is symmetric (within tol.gram_symmetry_relative of
/// its largest entry) and its Cholesky pivots are all > 0. The factor is
/// kept as the certificate and reused for evaluation.
GramValidation gram_validate(const SquareMatrix& gram,
                             const Tolerances& tol = kDefaultTolerances);

/// Lower-triangular Cholesky factor L of an SPD matrix G = L Lᵀ.
class GramFactor {
 public:
  std::size_t size() const noexcept { return n_; }
  double lower(std::size_t r, std::size_t c) const { return l_[r * n_ + c]; }

  /// sqrt(xᵀ G x) evaluated as ||Lᵀ x||₂, which is never the square root
  /// of a negative round-off.
  double quadratic_norm(std::span<const double> x) const;

 private:
  friend GramValidation gram_validate(const SquareMatrix&, const Tolerances&);
  GramFactor(std::size_t n, std::vector<double> l) : n_(n), l_(std::move(l)) {}

  std::size_t n_;
  std::vector<double> l_;
};

/// Certificate produced by gram_validate. `factor` is present iff valid.
struct GramValidation {
  bool valid = false;
  std::optional<GramFactor> factor;
  std::string reason;
  // Index and value of the first nonpositive pivot, when that was the failure.
  std::optional<std::size_t> failed_pivot;
  double pivot_value = 0.0;
  std::vector<double> pivots;
};

}  // namespace normgeo
