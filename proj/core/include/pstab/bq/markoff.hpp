#pragma once

#include <cstdint>

#include "pstab/moebius/moebius_map.hpp"

namespace pstab::bq {

using moebius::Complex;

// Traces (x, y, z) of SL(2,C) lifts of a, b, ab. kappa is the commutator
// trace x^2 + y^2 + z^2 - xyz - 2, carried along unchanged by moves.
class MarkoffTriple {
 public:
  MarkoffTriple(Complex x, Complex y, Complex z);
  // Checks the supplied kappa against the triple (1e-8, scaled by magnitude).
  MarkoffTriple(Complex x, Complex y, Complex z, Complex kappa);

  Complex x() const noexcept { return x_; }
  Complex y() const noexcept { return y_; }
  Complex z() const noexcept { return z_; }
  Complex kappa() const noexcept { return kappa_; }

 private:
  Complex x_, y_, z_, kappa_;
};

enum class Coordinate { X, Y, Z };

// Replaces one coordinate by its Vieta partner, e.g. Z: (x, y, xy - z).
MarkoffTriple markoff_move(const MarkoffTriple& t, Coordinate which);

// Trace of rho(primitive_of_slope(p, q)) from the triple at (0/1, 1/0, 1/1)
// by mediant recursion tr w(l + r) = tr w(l) tr w(r) - tr w(l - r).
Complex slope_trace(const MarkoffTriple& t, std::int64_t p, std::int64_t q);

struct QuadraticRoots {
  Complex first;   // root of larger modulus
  Complex second;
};

// Roots y of y^2 - xz y + (x^2 + z^2 - 2 - kappa) = 0.
QuadraticRoots solve_y_from_fricke(Complex x, Complex z, Complex kappa);

}  // namespace pstab::bq
