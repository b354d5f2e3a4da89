#pragma once

#include <string_view>

#include "pstab/moebius/moebius_map.hpp"

namespace pstab::moebius {

enum class DiskSide { Inside, Outside };

std::string_view to_string(DiskSide side) noexcept;

// Closed round disk on the Riemann sphere bounded by |z - center| = radius.
// Inside is the bounded side, Outside the side containing infinity.
struct SphereDisk {
  Complex center;
  double radius;
  DiskSide side;

  SphereDisk(Complex center_, double radius_, DiskSide side_);

  bool contains(Complex z) const noexcept;
};

// Image of a round disk under m. The interior side is the one that contains
// infinity exactly when the pole -d/c lies in the source disk. Throws
// ImageIsLine when the boundary circle passes within tol of the pole.
SphereDisk image_circle(const MoebiusMap& m, const SphereDisk& disk, double tol = kDefaultTol);

}  // namespace pstab::moebius
