#pragma once

#include <complex>
#include <string_view>

namespace pstab::moebius {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;

// SL(2,C) lift of a Moebius transformation z -> (a z + b) / (c z + d).
// -M represents the same element of PSL(2,C); quantities exported for PSL
// use are sign-robust.
class MoebiusMap {
 public:
  MoebiusMap() : a_(1.0), b_(0.0), c_(0.0), d_(1.0) {}
  // Requires finite entries and |ad - bc - 1| <= det_tol.
  MoebiusMap(Complex a, Complex b, Complex c, Complex d, double det_tol = kDefaultTol);

  // Scales by 1/sqrt(ad - bc); rejects singular or non-finite input.
  static MoebiusMap normalized(Complex a, Complex b, Complex c, Complex d);
  static MoebiusMap identity() { return {}; }
  static MoebiusMap diagonal(Complex lambda);

  Complex a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }
  Complex c() const noexcept { return c_; }
  Complex d() const noexcept { return d_; }
  Complex trace() const noexcept { return a_ + d_; }
  Complex det() const noexcept { return a_ * d_ - b_ * c_; }

  MoebiusMap inverse() const noexcept { return raw(d_, -b_, -c_, a_); }
  MoebiusMap operator-() const noexcept { return raw(-a_, -b_, -c_, -d_); }

  // Action on C; the caller handles the pole -d/c.
  Complex apply(Complex z) const { return (a_ * z + b_) / (c_ * z + d_); }

  // Largest entry-wise distance to another lift.
  double distance(const MoebiusMap& other) const noexcept;

  // Product with determinant renormalization (see moebius_map.cpp).
  friend MoebiusMap operator*(const MoebiusMap& m, const MoebiusMap& n);

 private:
  static MoebiusMap raw(Complex a, Complex b, Complex c, Complex d) noexcept {
    MoebiusMap m;
    m.a_ = a;
    m.b_ = b;
    m.c_ = c;
    m.d_ = d;
    return m;
  }

  Complex a_, b_, c_, d_;
};

MoebiusMap power(const MoebiusMap& m, int exponent);

enum class IsometryClass { Identity, Elliptic, Parabolic, Loxodromic };

std::string_view to_string(IsometryClass kind) noexcept;
IsometryClass isometry_class_from_string(std::string_view name);

// With T = trace: Identity if +-m is within tol of I entry-wise; Parabolic if
// |T -+ 2| <= tol; Elliptic if |Im T| <= tol and |Re T| < 2; else Loxodromic.
IsometryClass classify(const MoebiusMap& m, double tol = kDefaultTol);

// The trace-only part of classify: true for parabolic, elliptic and identity traces.
bool is_non_loxodromic_trace(Complex trace, double tol = kDefaultTol) noexcept;

// 2 ln|lambda| with lambda the eigenvalue of modulus >= 1.
double translation_length(const MoebiusMap& m) noexcept;
double translation_length_of_trace(Complex trace) noexcept;

}  // namespace pstab::moebius
