#include "pstab/moebius/moebius_map.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pstab/error.hpp"

namespace pstab::moebius {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(Complex a, Complex b, Complex c, Complex d) {
  if (!finite(a) || !finite(b) || !finite(c) || !finite(d)) {
    throw Error(ErrorCode::NonFinite, "matrix entries must be finite");
  }
}

// Beyond this entry scale the computed determinant is dominated by rounding
// and rescaling by it would inject noise rather than remove drift.
constexpr double kRenormalizeScale = 1e8;

}  // namespace

MoebiusMap::MoebiusMap(Complex a, Complex b, Complex c, Complex d, double det_tol) : a_(a), b_(b), c_(c), d_(d) {
  require_finite(a, b, c, d);
  const double err = std::abs(det() - 1.0);
  if (!(err <= det_tol)) {
    throw Error(ErrorCode::DeterminantError, "determinant differs from 1 by " + std::to_string(err));
  }
}

MoebiusMap MoebiusMap::normalized(Complex a, Complex b, Complex c, Complex d) {
  require_finite(a, b, c, d);
  const Complex det = a * d - b * c;
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (std::abs(det) <= 1e-14 * scale * scale || scale == 0.0) {
    throw Error(ErrorCode::DeterminantError, "matrix is singular");
  }
  const Complex s = std::sqrt(det);
  return raw(a / s, b / s, c / s, d / s);
}

MoebiusMap MoebiusMap::diagonal(Complex lambda) {
  if (!finite(lambda) || lambda == Complex(0.0)) throw Error(ErrorCode::DeterminantError, "eigenvalue must be nonzero");
  return raw(lambda, 0.0, 0.0, 1.0 / lambda);
}

double MoebiusMap::distance(const MoebiusMap& o) const noexcept {
  return std::max({std::abs(a_ - o.a_), std::abs(b_ - o.b_), std::abs(c_ - o.c_), std::abs(d_ - o.d_)});
}

MoebiusMap operator*(const MoebiusMap& m, const MoebiusMap& n) {
  Complex a = m.a_ * n.a_ + m.b_ * n.c_;
  Complex b = m.a_ * n.b_ + m.b_ * n.d_;
  Complex c = m.c_ * n.a_ + m.d_ * n.c_;
  Complex d = m.c_ * n.b_ + m.d_ * n.d_;
  const double scale = std::abs(a) * std::abs(d) + std::abs(b) * std::abs(c);
  if (scale < kRenormalizeScale) {
    const Complex det = a * d - b * c;
    if (det != Complex(1.0) && det != Complex(0.0)) {
      const Complex s = std::sqrt(det);
      a /= s;
      b /= s;
      c /= s;
      d /= s;
    }
  }
  return MoebiusMap::raw(a, b, c, d);
}

MoebiusMap power(const MoebiusMap& m, int exponent) {
  MoebiusMap base = exponent < 0 ? m.inverse() : m;
  unsigned n = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  MoebiusMap result;
  while (n > 0) {
    if (n & 1U) result = result * base;
    base = base * base;
    n >>= 1U;
  }
  return result;
}

std::string_view to_string(IsometryClass kind) noexcept {
  switch (kind) {
    case IsometryClass::Identity: return "IDENTITY";
    case IsometryClass::Elliptic: return "ELLIPTIC";
    case IsometryClass::Parabolic: return "PARABOLIC";
    case IsometryClass::Loxodromic: return "LOXODROMIC";
  }
  return "UNKNOWN";
}

IsometryClass isometry_class_from_string(std::string_view name) {
  for (auto k : {IsometryClass::Identity, IsometryClass::Elliptic, IsometryClass::Parabolic,
                 IsometryClass::Loxodromic}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::ParseError, "unknown isometry class '" + std::string(name) + "'");
}

bool is_non_loxodromic_trace(Complex t, double tol) noexcept {
  if (std::abs(t - 2.0) <= tol || std::abs(t + 2.0) <= tol) return true;
  return std::abs(t.imag()) <= tol && std::abs(t.real()) < 2.0;
}

IsometryClass classify(const MoebiusMap& m, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "classification tolerance must be positive");
  const MoebiusMap id;
  if (m.distance(id) <= tol || (-m).distance(id) <= tol) return IsometryClass::Identity;
  const Complex t = m.trace();
  if (std::abs(t - 2.0) <= tol || std::abs(t + 2.0) <= tol) return IsometryClass::Parabolic;
  if (std::abs(t.imag()) <= tol && std::abs(t.real()) < 2.0) return IsometryClass::Elliptic;
  return IsometryClass::Loxodromic;
}

double translation_length_of_trace(Complex t) noexcept {
  if (is_non_loxodromic_trace(t)) return 0.0;
  // Both eigenvalues (t +- sqrt(t^2 - 4)) / 2; the larger one avoids cancellation.
  const Complex s = std::sqrt(t * t - 4.0);
  const Complex l1 = (t + s) / 2.0;
  const Complex l2 = (t - s) / 2.0;
  const double mod = std::max(std::abs(l1), std::abs(l2));
  return std::max(0.0, 2.0 * std::log(mod));
}

double translation_length(const MoebiusMap& m) noexcept { return translation_length_of_trace(m.trace()); }

}  // namespace pstab::moebius
