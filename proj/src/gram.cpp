#include "normgeo/gram.hpp"

#include <algorithm>
#include <cmath>

#include "normgeo/errors.hpp"

namespace normgeo {

SquareMatrix::SquareMatrix(const std::vector<std::vector<double>>& rows)
    : n_(rows.size()), data_(rows.size() * rows.size()) {
  if (n_ == 0) throw DomainError("matrix must be non-empty");
  for (std::size_t r = 0; r < n_; ++r) {
    if (rows[r].size() != n_) throw DomainError("matrix is not square");
    std::copy(rows[r].begin(), rows[r].end(), data_.begin() + r * n_);
  }
}

SquareMatrix SquareMatrix::identity(std::size_t n) {
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<std::vector<double>> SquareMatrix::rows() const {
  std::vector<std::vector<double>> out(n_, std::vector<double>(n_));
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

double GramFactor::quadratic_norm(std::span<const double> x) const {
  // z = Lᵀ x, z_c = sum_{r >= c} L(r, c) x_r
  double scale = 0.0;
  double sum = 0.0;
  for (std::size_t c = 0; c < n_; ++c) {
    double z = 0.0;
    for (std::size_t r = c; r < n_; ++r) z += l_[r * n_ + c] * x[r];
    const double a = std::abs(z);
    if (a == 0.0) continue;
    if (a > scale) {
      sum = 1.0 + sum * (scale / a) * (scale / a);
      scale = a;
    } else {
      sum += (a / scale) * (a / scale);
    }
  }
  return scale * std::sqrt(sum);
}

GramValidation gram_validate(const SquareMatrix& gram, const Tolerances& tol) {
  GramValidation out;
  const std::size_t n = gram.size();

  double max_abs = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!std::isfinite(gram(r, c))) {
        out.reason = "non-finite entry";
        return out;
      }
      max_abs = std::max(max_abs, std::abs(gram(r, c)));
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) {
      if (std::abs(gram(r, c) - gram(c, r)) > tol.gram_symmetry_relative * max_abs) {
        out.reason = "matrix is not symmetric at (" + std::to_string(r) + ", " +
                     std::to_string(c) + ")";
        return out;
      }
    }
  }

  // Cholesky–Banachiewicz on the symmetric part.
  std::vector<double> l(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double pivot = gram(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= l[j * n + k] * l[j * n + k];
    out.pivots.push_back(pivot);
    if (!(pivot > 0.0)) {
      out.failed_pivot = j;
      out.pivot_value = pivot;
      out.reason = "nonpositive pivot " + std::to_string(pivot) + " at index " + std::to_string(j);
      return out;
    }
    const double d = std::sqrt(pivot);
    l[j * n + j] = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = 0.5 * (gram(i, j) + gram(j, i));
      for (std::size_t k = 0; k < j; ++k) s -= l[i * n + k] * l[j * n + k];
      l[i * n + j] = s / d;
    }
  }
  out.valid = true;
  out.factor = GramFactor(n, std::move(l));
  return out;
}

}  // namespace normgeo
