#pragma once

#include <vector>

#include "pstab/freegroup/automorphism.hpp"
#include "pstab/freegroup/word.hpp"
#include "pstab/moebius/moebius_map.hpp"

namespace pstab::moebius {

// A homomorphism F_n -> SL(2,C) given by one lift per generator. Characters
// of rank > 2 are represented through these chosen lifts.
class Representation {
 public:
  explicit Representation(std::vector<MoebiusMap> images);

  int rank() const noexcept { return static_cast<int>(images_.size()); }
  const MoebiusMap& image(int generator) const { return images_.at(static_cast<std::size_t>(generator)); }
  const std::vector<MoebiusMap>& images() const noexcept { return images_; }

 private:
  std::vector<MoebiusMap> images_;
};

// rho(w) as an ordered product; the empty word gives the identity.
MoebiusMap evaluate(const Representation& rep, const freegroup::Word& w);

// u rho u^-1.
Representation conjugate(const Representation& rep, const MoebiusMap& u);

// rho o phi: generator i goes to rho(phi(x_i)).
Representation precompose(const Representation& rep, const freegroup::WhiteheadAutomorphism& phi);

struct FrickeTraces {
  Complex x;      // tr rho(a)
  Complex y;      // tr rho(b)
  Complex z;      // tr rho(ab)
  Complex kappa;  // tr rho(a b a^-1 b^-1)
};

// Rank-2 trace coordinates. Throws InternalCheck if the commutator trace
// disagrees with x^2 + y^2 + z^2 - xyz - 2 beyond 1e-8 (scaled by the
// magnitude of the terms).
FrickeTraces fricke_traces(const Representation& rep);

Complex fricke_kappa(Complex x, Complex y, Complex z) noexcept;

}  // namespace pstab::moebius
