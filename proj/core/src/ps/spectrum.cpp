#include "pstab/ps/spectrum.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pstab/error.hpp"

namespace pstab::ps {

using freegroup::CyclicWord;
using moebius::IsometryClass;

std::string_view to_string(PsVerdict v) noexcept {
  return v == PsVerdict::NoObstruction ? "NO_OBSTRUCTION" : "FAILURE";
}

PsVerdict ps_verdict_from_string(std::string_view name) {
  if (name == "NO_OBSTRUCTION") return PsVerdict::NoObstruction;
  if (name == "FAILURE") return PsVerdict::Failure;
  throw Error(ErrorCode::ParseError, "unknown verdict '" + std::string(name) + "'");
}

std::vector<SpectrumEntry> primitive_length_spectrum(const moebius::Representation& rep, int max_len,
                                                     const ScanOptions& opts) {
  const auto classes = freegroup::enumerate_primitive_classes(rep.rank(), max_len, opts.primitivity);
  std::vector<SpectrumEntry> entries;
  entries.reserve(classes.size());
  for (const auto& cls : classes) {
    const auto m = moebius::evaluate(rep, cls.as_word());
    const double len = moebius::translation_length(m);
    entries.push_back({cls, cls.length(), len, len / static_cast<double>(cls.length()), moebius::classify(m, opts.tol)});
  }
  return entries;
}

double generator_displacement_bound(const moebius::Representation& rep, const moebius::UhsPoint& basepoint) {
  double bound = 0.0;
  for (const auto& g : rep.images()) bound = std::max(bound, moebius::uhs_distance(basepoint, moebius::act_uhs(g, basepoint)));
  return bound;
}

PsReport ps_scan(const moebius::Representation& rep, int max_len, const ScanOptions& opts) {
  PsReport report;
  report.max_len = max_len;
  report.entries = primitive_length_spectrum(rep, max_len, opts);
  for (const auto& e : report.entries) {
    report.min_ratio = report.min_ratio ? std::min(*report.min_ratio, e.ratio) : e.ratio;
    report.max_ratio = report.max_ratio ? std::max(*report.max_ratio, e.ratio) : e.ratio;
    if (e.kind != IsometryClass::Loxodromic) report.failures.push_back(e.cls);
  }
  report.verdict = report.failures.empty() ? PsVerdict::NoObstruction : PsVerdict::Failure;

  if (report.max_ratio) {
    const double ceiling = generator_displacement_bound(rep);
    if (*report.max_ratio > ceiling + 1e-6) {
      throw Error(ErrorCode::InternalCheck, "ratio " + std::to_string(*report.max_ratio) +
                                                " exceeds generator displacement " + std::to_string(ceiling));
    }
  }
  return report;
}

moebius::Representation restrict(const moebius::Representation& rep, const std::vector<int>& subset) {
  if (subset.empty() || static_cast<int>(subset.size()) >= rep.rank()) {
    throw Error(ErrorCode::BadSubset, "subset must be nonempty and smaller than the rank");
  }
  std::set<int> seen;
  std::vector<moebius::MoebiusMap> images;
  for (int i : subset) {
    if (i < 1 || i > rep.rank() || !seen.insert(i).second) {
      throw Error(ErrorCode::BadSubset, "generator index " + std::to_string(i) + " invalid or repeated");
    }
    images.push_back(rep.image(i - 1));
  }
  return moebius::Representation(std::move(images));
}

}  // namespace pstab::ps
