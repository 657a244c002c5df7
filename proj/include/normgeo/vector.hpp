#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace normgeo {

/// Dense real coordinate vector. Always has at least one coordinate and
/// every coordinate is finite; arithmetic that would overflow throws
/// DomainError.
class Vector {
 public:
  explicit Vector(std::vector<double> coords);
  Vector(std::initializer_list<double> coords);

  static Vector zeros(std::size_t dim);

  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const double> coords() const noexcept { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const noexcept;
  double euclidean_norm() const noexcept;

  /// this + t * other
  Vector plus_scaled(const Vector& other, double t) const;
  Vector scaled(double s) const;
  /// Coordinate-wise division; used for x / ||x|| so that the quotient is
  /// rounded once per coordinate.
  Vector divided(double s) const;

  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a);
  friend Vector operator*(double s, const Vector& a) { return a.scaled(s); }

  friend bool operator==(const Vector& a, const Vector& b) = default;

 private:
  struct Unchecked {};
  Vector(std::vector<double> coords, Unchecked) : coords_(std::move(coords)) {}
  static Vector checked_result(std::vector<double> coords);

  std::vector<double> coords_;
};

void require_same_dim(const Vector& a, const Vector& b);

}  // namespace normgeo
