#include "pstab/bq/markoff.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pstab/error.hpp"
#include "pstab/freegroup/slope.hpp"
#include "pstab/moebius/representation.hpp"

namespace pstab::bq {

MarkoffTriple::MarkoffTriple(Complex x, Complex y, Complex z)
    : x_(x), y_(y), z_(z), kappa_(moebius::fricke_kappa(x, y, z)) {}

MarkoffTriple::MarkoffTriple(Complex x, Complex y, Complex z, Complex kappa) : x_(x), y_(y), z_(z), kappa_(kappa) {
  const double scale = std::max({1.0, std::norm(x), std::norm(y), std::norm(z), std::abs(x * y * z)});
  const double err = std::abs(moebius::fricke_kappa(x, y, z) - kappa);
  if (err > 1e-8 * scale) {
    throw Error(ErrorCode::InvalidArgument, "triple does not lie on the stated commutator level (off by " +
                                                std::to_string(err) + ")");
  }
}

MarkoffTriple markoff_move(const MarkoffTriple& t, Coordinate which) {
  MarkoffTriple moved = t;
  switch (which) {
    case Coordinate::X: moved = MarkoffTriple(t.y() * t.z() - t.x(), t.y(), t.z()); break;
    case Coordinate::Y: moved = MarkoffTriple(t.x(), t.x() * t.z() - t.y(), t.z()); break;
    case Coordinate::Z: moved = MarkoffTriple(t.x(), t.y(), t.x() * t.y() - t.z()); break;
  }
  // Keep the level exactly rather than the recomputed, rounded value.
  return MarkoffTriple(moved.x(), moved.y(), moved.z(), t.kappa());
}

Complex slope_trace(const MarkoffTriple& t, std::int64_t p, std::int64_t q) {
  const auto s = freegroup::Slope::make(p, q);
  Complex tl = t.x();
  Complex tr = t.y();
  Complex tm = t.z();
  std::int64_t tp = s.p;
  if (tp < 0) {
    // b -> b^-1 keeps tr b and sends tr ab to tr a tr b - tr ab.
    tp = -tp;
    tm = t.x() * t.y() - t.z();
  }
  const std::int64_t tq = s.q;
  if (tp == 0) return tl;
  if (tq == 0) return tr;

  std::int64_t lp = 0, lq = 1, rp = 1, rq = 0;
  for (;;) {
    const std::int64_t mp = lp + rp;
    const std::int64_t mq = lq + rq;
    if (mp == tp && mq == tq) return tm;
    if (tp * mq < mp * tq) {
      // (l, m): new mediant l m, and tr(l m) = tr l tr m - tr(r).
      const Complex next = tl * tm - tr;
      rp = mp;
      rq = mq;
      tr = tm;
      tm = next;
    } else {
      const Complex next = tm * tr - tl;
      lp = mp;
      lq = mq;
      tl = tm;
      tm = next;
    }
  }
}

QuadraticRoots solve_y_from_fricke(Complex x, Complex z, Complex kappa) {
  const Complex b = -x * z;
  const Complex c = x * x + z * z - 2.0 - kappa;
  Complex s = std::sqrt(b * b - 4.0 * c);
  if ((std::conj(b) * s).real() < 0.0) s = -s;
  const Complex q = -(b + s) / 2.0;
  if (q == Complex(0.0)) return {0.0, 0.0};
  return {q, c / q};
}

}  // namespace pstab::bq
