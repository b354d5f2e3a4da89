#pragma once

#include "pstab/moebius/moebius_map.hpp"

namespace pstab::moebius {

// Point (z, t) of upper half-space, t > 0.
struct UhsPoint {
  Complex z;
  double t;

  UhsPoint(Complex z_, double t_);
  static UhsPoint origin() { return {0.0, 1.0}; }
};

// Poincare extension of m to upper half-space.
UhsPoint act_uhs(const MoebiusMap& m, const UhsPoint& p);

double uhs_distance(const UhsPoint& p, const UhsPoint& q) noexcept;

// A point on the translation axis of a loxodromic map (the top of the
// geodesic joining its fixed points). Throws InvalidArgument otherwise.
UhsPoint axis_point(const MoebiusMap& m);

}  // namespace pstab::moebius
