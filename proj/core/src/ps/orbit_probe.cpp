#include "pstab/ps/orbit_probe.hpp"

#include <cmath>

#include "pstab/error.hpp"

namespace pstab::ps {

using moebius::Complex;

namespace {

struct Mat {
  Complex a, b, c, d;
};

Mat mul(const Mat& m, const Mat& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

double frobenius(const Mat& m) { return std::sqrt(std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d)); }

}  // namespace

std::vector<double> orbit_distances(const moebius::MoebiusMap& m, int periods, const moebius::UhsPoint& p) {
  if (periods < 0) throw Error(ErrorCode::InvalidArgument, "periods must be nonnegative");
  // Move the basepoint to (0, 1): T = [[sqrt t, z / sqrt t], [0, 1 / sqrt t]].
  const double st = std::sqrt(p.t);
  const Mat tm{st, p.z / st, 0.0, 1.0 / st};
  const Mat tinv{1.0 / st, -p.z / st, 0.0, st};
  const Mat n = mul(mul(tinv, Mat{m.a(), m.b(), m.c(), m.d()}), tm);

  // For an SL(2,C) matrix P, 4 sinh^2(d(o, P o) / 2) = |a - conj d|^2 + |b + conj c|^2.
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(periods) + 1);
  Mat power{1.0, 0.0, 0.0, 1.0};
  double log_scale = 0.0;
  for (int k = 0; k <= periods; ++k) {
    if (k > 0) {
      power = mul(power, n);
      const double f = frobenius(power);
      power = {power.a / f, power.b / f, power.c / f, power.d / f};
      log_scale += std::log(f);
    }
    const double g = std::norm(power.a - std::conj(power.d)) + std::norm(power.b + std::conj(power.c));
    if (g == 0.0) {
      out.push_back(0.0);
      continue;
    }
    const double log_g = 2.0 * log_scale + std::log(g);
    out.push_back(log_g < 700.0 ? 2.0 * std::asinh(std::exp(0.5 * log_g) / 2.0) : log_g);
  }
  return out;
}

OrbitProbe orbit_growth_probe(const moebius::Representation& rep, const freegroup::CyclicWord& w, int periods,
                              const moebius::UhsPoint& basepoint) {
  if (periods < 2) throw Error(ErrorCode::InvalidArgument, "orbit probe needs at least 2 periods");
  const auto m = moebius::evaluate(rep, w.as_word());
  OrbitProbe probe;
  probe.distances = orbit_distances(m, periods, basepoint);
  double num = 0.0;
  double den = 0.0;
  for (int k = 0; k <= periods; ++k) {
    num += k * probe.distances[static_cast<std::size_t>(k)];
    den += static_cast<double>(k) * k;
  }
  probe.slope = num / den;
  for (int k = 0; k <= periods; ++k) {
    probe.residuals.push_back(probe.distances[static_cast<std::size_t>(k)] - probe.slope * k);
  }
  return probe;
}

}  // namespace pstab::ps
