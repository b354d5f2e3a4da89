#include "pstab/moebius/schottky.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pstab/error.hpp"

namespace pstab::moebius {

std::string_view to_string(SchottkyFailure f) noexcept {
  switch (f) {
    case SchottkyFailure::None: return "NONE";
    case SchottkyFailure::Disjointness: return "DISJOINTNESS";
    case SchottkyFailure::Pairing: return "PAIRING";
    case SchottkyFailure::Orientation: return "ORIENTATION";
    case SchottkyFailure::Degenerate: return "DEGENERATE";
  }
  return "UNKNOWN";
}

double disk_separation(const SphereDisk& p, const SphereDisk& q) noexcept {
  const double d = std::abs(p.center - q.center);
  if (p.side == DiskSide::Inside && q.side == DiskSide::Inside) return d - p.radius - q.radius;
  if (p.side == DiskSide::Outside && q.side == DiskSide::Outside) return -std::numeric_limits<double>::infinity();
  const SphereDisk& in = p.side == DiskSide::Inside ? p : q;
  const SphereDisk& out = p.side == DiskSide::Inside ? q : p;
  return out.radius - (d + in.radius);
}

SchottkyVerdict schottky_check(const Representation& rep, const std::vector<std::pair<SphereDisk, SphereDisk>>& pairs,
                               double tol) {
  if (static_cast<int>(pairs.size()) != rep.rank()) {
    throw Error(ErrorCode::RankMismatch, "need one disk pair per generator");
  }
  std::vector<SphereDisk> disks;
  for (const auto& [d, dp] : pairs) {
    disks.push_back(d);
    disks.push_back(dp);
  }
  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      if (!(disk_separation(disks[i], disks[j]) > tol)) {
        return {false, SchottkyFailure::Disjointness,
                "disks " + std::to_string(i) + " and " + std::to_string(j) + " are not disjoint"};
      }
    }
  }
  for (int g = 0; g < rep.rank(); ++g) {
    const auto& [d, dp] = pairs[static_cast<std::size_t>(g)];
    SphereDisk image = d;
    try {
      image = image_circle(rep.image(g), d, tol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ImageIsLine) throw;
      return {false, SchottkyFailure::Degenerate, "generator " + std::to_string(g) + ": " + e.what()};
    }
    const double scale = std::max(1.0, dp.radius);
    if (std::abs(image.center - dp.center) > tol * scale || std::abs(image.radius - dp.radius) > tol * scale) {
      return {false, SchottkyFailure::Pairing,
              "generator " + std::to_string(g) + " does not carry its disk onto the paired circle"};
    }
    if (image.side == dp.side) {
      return {false, SchottkyFailure::Orientation,
              "generator " + std::to_string(g) + " maps its disk onto the paired disk instead of its complement"};
    }
  }
  return {true, SchottkyFailure::None, ""};
}

}  // namespace pstab::moebius
