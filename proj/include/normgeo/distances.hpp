#pragma once

#include "normgeo/norm.hpp"

namespace normgeo {

/// α[x,y] and β[x,y] with the norms of both arguments.
struct DistancePair {
  double alpha = 0.0;
  double beta = 0.0;
  double norm_x = 0.0;
  double norm_y = 0.0;
};

/// Angular distance ||x/||x|| - y/||y||||. Throws DomainError if either
/// argument has zero norm. Not clamped; may exceed 2 by round-off.
double angular_distance(const Norm& norm, const Vector& x, const Vector& y);

/// Skew-angular distance ||x/||y|| - y/||x||||. Same domain as α.
double skew_angular_distance(const Norm& norm, const Vector& x, const Vector& y);

DistancePair distance_pair(const Norm& norm, const Vector& x, const Vector& y);

/// α computed from norms the caller already has.
double angular_distance(const Norm& norm, const Vector& x, double norm_x, const Vector& y, double norm_y);
double skew_angular_distance(const Norm& norm, const Vector& x, double norm_x, const Vector& y, double norm_y);

}  // namespace normgeo
