#pragma once

#include <vector>

#include "pstab/freegroup/word.hpp"
#include "pstab/moebius/moebius_map.hpp"
#include "pstab/moebius/representation.hpp"
#include "pstab/moebius/upper_half_space.hpp"

namespace pstab::ps {

struct OrbitProbe {
  double slope;                    // least-squares fit d_m ~ slope * m through the origin
  std::vector<double> distances;   // d_m = d(p, rho(w)^m p), m = 0..periods
  std::vector<double> residuals;   // d_m - slope * m
};

// d(p, m^k p) for k = 0..periods. Powers are accumulated in log scale so
// long periodic leaves do not overflow.
std::vector<double> orbit_distances(const moebius::MoebiusMap& m, int periods, const moebius::UhsPoint& basepoint);

// Displacement growth along the periodic leaf of w. For loxodromic rho(w)
// the slope tends to its translation length; a basepoint on the axis gives
// it exactly. Requires periods >= 2.
OrbitProbe orbit_growth_probe(const moebius::Representation& rep, const freegroup::CyclicWord& w, int periods,
                              const moebius::UhsPoint& basepoint = moebius::UhsPoint::origin());

}  // namespace pstab::ps
