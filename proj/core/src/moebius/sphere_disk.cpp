#include "pstab/moebius/sphere_disk.hpp"

#include <algorithm>
#include <cmath>

#include "pstab/error.hpp"

namespace pstab::moebius {

std::string_view to_string(DiskSide side) noexcept { return side == DiskSide::Inside ? "INSIDE" : "OUTSIDE"; }

SphereDisk::SphereDisk(Complex center_, double radius_, DiskSide side_) : center(center_), radius(radius_), side(side_) {
  if (!(radius_ > 0.0) || !std::isfinite(radius_) || !std::isfinite(center_.real()) ||
      !std::isfinite(center_.imag())) {
    throw Error(ErrorCode::InvalidArgument, "disk needs a finite center and positive radius");
  }
}

bool SphereDisk::contains(Complex z) const noexcept {
  const double d = std::abs(z - center);
  return side == DiskSide::Inside ? d <= radius : d >= radius;
}

SphereDisk image_circle(const MoebiusMap& m, const SphereDisk& disk, double tol) {
  const Complex c0 = disk.center;
  const double r = disk.radius;

  if (m.c() == Complex(0.0)) {
    // Affine map: z -> (a z + b) / d keeps infinity fixed.
    const Complex ratio = m.a() / m.d();
    return {m.apply(c0), r * std::abs(ratio), disk.side};
  }

  const Complex pole = -m.d() / m.c();
  const double pole_dist = std::abs(pole - c0);
  if (std::abs(pole_dist - r) <= tol * std::max(1.0, r)) {
    throw Error(ErrorCode::ImageIsLine, "circle passes through the pole; its image is a line");
  }

  // The image center is the image of the pole's reflection in the circle;
  // a pole at the center reflects to infinity, which goes to a / c.
  const Complex center =
      pole_dist <= 1e-15 * r ? m.a() / m.c() : m.apply(c0 + r * r / std::conj(pole - c0));
  // Sample the boundary at the point farthest from the pole.
  const Complex dir = pole_dist > 0.0 ? (c0 - pole) / pole_dist : Complex(1.0);
  const double radius = std::abs(m.apply(c0 + r * dir) - center);

  const bool pole_in_disk = disk.side == DiskSide::Inside ? pole_dist < r : pole_dist > r;
  return {center, radius, pole_in_disk ? DiskSide::Outside : DiskSide::Inside};
}

}  // namespace pstab::moebius
