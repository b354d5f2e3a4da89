#include "pstab/moebius/upper_half_space.hpp"

#include <cmath>

#include "pstab/error.hpp"

namespace pstab::moebius {

UhsPoint::UhsPoint(Complex z_, double t_) : z(z_), t(t_) {
  if (!(t_ > 0.0) || !std::isfinite(t_) || !std::isfinite(z_.real()) || !std::isfinite(z_.imag())) {
    throw Error(ErrorCode::InvalidArgument, "upper half-space point needs finite z and t > 0");
  }
}

UhsPoint act_uhs(const MoebiusMap& m, const UhsPoint& p) {
  const Complex q = m.c() * p.z + m.d();
  const double t2 = p.t * p.t;
  const double s = std::norm(q) + std::norm(m.c()) * t2;
  if (!(s > 0.0) || !std::isfinite(s)) throw Error(ErrorCode::DegenerateAction, "degenerate upper half-space action");
  const Complex z = ((m.a() * p.z + m.b()) * std::conj(q) + m.a() * std::conj(m.c()) * t2) / s;
  const double t = p.t / s;
  if (!(t > 0.0)) throw Error(ErrorCode::DegenerateAction, "image point left upper half-space (underflow)");
  return {z, t};
}

double uhs_distance(const UhsPoint& p, const UhsPoint& q) noexcept {
  // cosh d = 1 + 2 sinh^2(d/2), written to keep precision for nearby points.
  const double num = std::norm(p.z - q.z) + (p.t - q.t) * (p.t - q.t);
  return 2.0 * std::asinh(std::sqrt(num / (4.0 * p.t * q.t)));
}

UhsPoint axis_point(const MoebiusMap& m) {
  if (classify(m) != IsometryClass::Loxodromic) throw Error(ErrorCode::InvalidArgument, "axis_point needs a loxodromic map");
  // Fixed points solve c z^2 + (d - a) z - b = 0, discriminant T^2 - 4.
  const Complex amd = m.a() - m.d();
  const Complex s = std::sqrt(m.trace() * m.trace() - 4.0);
  const Complex qa = (std::abs(amd + s) >= std::abs(amd - s) ? amd + s : amd - s) / 2.0;
  const double scale = std::abs(m.a()) + std::abs(m.b()) + std::abs(m.c()) + std::abs(m.d());
  if (std::abs(m.c()) <= 1e-15 * scale) {
    // One fixed point at infinity; the other solves (d - a) z = b.
    const Complex fixed = m.b() / (m.d() - m.a());
    return {fixed, 1.0};
  }
  const Complex z1 = qa / m.c();
  const Complex z2 = -m.b() / qa;
  return {(z1 + z2) / 2.0, std::abs(z1 - z2) / 2.0};
}

}  // namespace pstab::moebius
