#include "normgeo/distances.hpp"

#include "normgeo/errors.hpp"

namespace normgeo {

namespace {

void require_nonzero(double nx, double ny) {
  if (!(nx > 0.0) || !(ny > 0.0)) throw DomainError("angular distances need nonzero vectors");
}

}  // namespace

double angular_distance(const Norm& norm, const Vector& x, double nx, const Vector& y, double ny) {
  require_nonzero(nx, ny);
  return norm(x.divided(nx) - y.divided(ny));
}

double skew_angular_distance(const Norm& norm, const Vector& x, double nx, const Vector& y, double ny) {
  require_nonzero(nx, ny);
  return norm(x.divided(ny) - y.divided(nx));
}

double angular_distance(const Norm& norm, const Vector& x, const Vector& y) {
  require_same_dim(x, y);
  return angular_distance(norm, x, norm(x), y, norm(y));
}

double skew_angular_distance(const Norm& norm, const Vector& x, const Vector& y) {
  require_same_dim(x, y);
  return skew_angular_distance(norm, x, norm(x), y, norm(y));
}

DistancePair distance_pair(const Norm& norm, const Vector& x, const Vector& y) {
  require_same_dim(x, y);
  DistancePair d;
  d.norm_x = norm(x);
  d.norm_y = norm(y);
  d.alpha = angular_distance(norm, x, d.norm_x, y, d.norm_y);
  d.beta = skew_angular_distance(norm, x, d.norm_x, y, d.norm_y);
  return d;
}

}  // namespace normgeo
