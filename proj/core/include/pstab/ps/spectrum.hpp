#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "pstab/freegroup/primitivity.hpp"
#include "pstab/freegroup/word.hpp"
#include "pstab/moebius/moebius_map.hpp"
#include "pstab/moebius/representation.hpp"
#include "pstab/moebius/upper_half_space.hpp"

namespace pstab::ps {

struct SpectrumEntry {
  freegroup::CyclicWord cls;
  std::size_t length;  // ||w||
  double trans_len;    // translation length of rho(w)
  double ratio;        // trans_len / length
  moebius::IsometryClass kind;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

// NoObstruction is evidence gathered up to max_len, never a proof of
// primitive stability.
enum class PsVerdict { NoObstruction, Failure };

std::string_view to_string(PsVerdict v) noexcept;
PsVerdict ps_verdict_from_string(std::string_view name);

struct PsReport {
  int max_len = 0;
  std::vector<SpectrumEntry> entries;
  std::optional<double> min_ratio;  // empty when there are no entries
  std::optional<double> max_ratio;
  std::vector<freegroup::CyclicWord> failures;  // non-loxodromic primitive classes
  PsVerdict verdict = PsVerdict::NoObstruction;

  friend bool operator==(const PsReport&, const PsReport&) = default;
};

struct ScanOptions {
  double tol = moebius::kDefaultTol;
  freegroup::PrimitivityOptions primitivity{};
};

// One entry per class of enumerate_primitive_classes(rank, max_len), in that order.
std::vector<SpectrumEntry> primitive_length_spectrum(const moebius::Representation& rep, int max_len,
                                                     const ScanOptions& opts = {});

// Aggregates the spectrum. Also checks the triangle-inequality ceiling
// max_ratio <= generator_displacement_bound(rep) + 1e-6 and throws
// InternalCheck if it is violated.
PsReport ps_scan(const moebius::Representation& rep, int max_len, const ScanOptions& opts = {});

// max_i d(x0, rho(x_i) x0).
double generator_displacement_bound(const moebius::Representation& rep,
                                    const moebius::UhsPoint& basepoint = moebius::UhsPoint::origin());

// Restriction to the generators with the given 1-based indices, in order.
// The subset must be nonempty, duplicate-free and smaller than the rank.
moebius::Representation restrict(const moebius::Representation& rep, const std::vector<int>& subset);

}  // namespace pstab::ps
