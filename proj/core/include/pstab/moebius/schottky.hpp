#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pstab/moebius/representation.hpp"
#include "pstab/moebius/sphere_disk.hpp"

namespace pstab::moebius {

enum class SchottkyFailure { None, Disjointness, Pairing, Orientation, Degenerate };

std::string_view to_string(SchottkyFailure f) noexcept;

struct SchottkyVerdict {
  bool valid;
  SchottkyFailure reason;
  std::string detail;
};

// pairs[i] = (D_i, D'_i). VALID iff the 2n closed disks are pairwise
// disjoint with margin tol and each generator maps D_i onto the closure of
// the complement of D'_i. A VALID verdict certifies a Schottky group.
SchottkyVerdict schottky_check(const Representation& rep,
                               const std::vector<std::pair<SphereDisk, SphereDisk>>& pairs,
                               double tol = kDefaultTol);

// Separation margin between two closed disks (> 0 means disjoint).
double disk_separation(const SphereDisk& p, const SphereDisk& q) noexcept;

}  // namespace pstab::moebius
