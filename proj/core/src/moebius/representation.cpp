#include "pstab/moebius/representation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pstab/error.hpp"

namespace pstab::moebius {

Representation::Representation(std::vector<MoebiusMap> images) : images_(std::move(images)) {
  if (images_.empty()) throw Error(ErrorCode::InvalidArgument, "a representation needs at least one generator");
}

MoebiusMap evaluate(const Representation& rep, const freegroup::Word& w) {
  if (rep.rank() != w.rank()) {
    throw Error(ErrorCode::RankMismatch, "word rank " + std::to_string(w.rank()) + " does not match representation rank " +
                                             std::to_string(rep.rank()));
  }
  MoebiusMap result;
  for (auto l : w.letters()) {
    const MoebiusMap& g = rep.image(l.generator());
    result = result * (l.is_inverse() ? g.inverse() : g);
  }
  return result;
}

Representation conjugate(const Representation& rep, const MoebiusMap& u) {
  std::vector<MoebiusMap> images;
  images.reserve(rep.images().size());
  const MoebiusMap uinv = u.inverse();
  for (const auto& g : rep.images()) images.push_back(u * g * uinv);
  return Representation(std::move(images));
}

Representation precompose(const Representation& rep, const freegroup::WhiteheadAutomorphism& phi) {
  if (rep.rank() != phi.rank()) throw Error(ErrorCode::RankMismatch, "automorphism rank differs from representation");
  std::vector<MoebiusMap> images;
  for (const auto& img : phi.images()) images.push_back(evaluate(rep, img));
  return Representation(std::move(images));
}

Complex fricke_kappa(Complex x, Complex y, Complex z) noexcept { return x * x + y * y + z * z - x * y * z - 2.0; }

FrickeTraces fricke_traces(const Representation& rep) {
  if (rep.rank() != 2) throw Error(ErrorCode::RankMismatch, "trace coordinates need a rank-2 representation");
  const MoebiusMap& a = rep.image(0);
  const MoebiusMap& b = rep.image(1);
  FrickeTraces t{a.trace(), b.trace(), (a * b).trace(), (a * b * a.inverse() * b.inverse()).trace()};
  const double scale = std::max({1.0, std::norm(t.x), std::norm(t.y), std::norm(t.z), std::abs(t.x * t.y * t.z)});
  const double err = std::abs(fricke_kappa(t.x, t.y, t.z) - t.kappa);
  if (err > 1e-8 * scale) {
    throw Error(ErrorCode::InternalCheck, "commutator trace identity violated by " + std::to_string(err));
  }
  return t;
}

}  // namespace pstab::moebius
