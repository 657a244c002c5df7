#include "normgeo/vector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "normgeo/errors.hpp"

namespace normgeo {

namespace {

void require_finite(const std::vector<double>& coords) {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!std::isfinite(coords[i])) {
      throw DomainError("vector coordinate " + std::to_string(i) + " is not finite");
    }
  }
}

}  // namespace

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DomainError("vector must have at least one coordinate");
  require_finite(coords_);
}

Vector::Vector(std::initializer_list<double> coords) : Vector(std::vector<double>(coords)) {}

Vector Vector::zeros(std::size_t dim) {
  if (dim == 0) throw DomainError("vector must have at least one coordinate");
  return Vector(std::vector<double>(dim, 0.0), Unchecked{});
}

Vector Vector::checked_result(std::vector<double> coords) {
  require_finite(coords);
  return Vector(std::move(coords), Unchecked{});
}

bool Vector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](double c) { return c == 0.0; });
}

double Vector::euclidean_norm() const noexcept {
  double scale = 0.0;
  for (double c : coords_) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (double c : coords_) {
    const double r = c / scale;
    sum += r * r;
  }
  return scale * std::sqrt(sum);
}

Vector Vector::plus_scaled(const Vector& other, double t) const {
  require_same_dim(*this, other);
  std::vector<double> out(coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coords_[i] + t * other.coords_[i];
  return checked_result(std::move(out));
}

Vector Vector::scaled(double s) const {
  std::vector<double> out(coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * coords_[i];
  return checked_result(std::move(out));
}

Vector Vector::divided(double s) const {
  if (s == 0.0) throw DomainError("division of a vector by zero");
  std::vector<double> out(coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coords_[i] / s;
  return checked_result(std::move(out));
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same_dim(a, b);
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coords_[i] + b.coords_[i];
  return Vector::checked_result(std::move(out));
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_dim(a, b);
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coords_[i] - b.coords_[i];
  return Vector::checked_result(std::move(out));
}

Vector operator-(const Vector& a) {
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a.coords_[i];
  return Vector(std::move(out), Vector::Unchecked{});
}

void require_same_dim(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) {
    throw DomainError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                      std::to_string(b.dim()));
  }
}

}  // namespace normgeo
