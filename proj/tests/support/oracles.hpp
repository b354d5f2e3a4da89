#pragma once

#include <numeric>
#include <string>

#include "pstab/freegroup/slope.hpp"
#include "pstab/freegroup/word.hpp"

namespace pstab::testing {

// Rank-2 primitive classes are determined by abelianization: the class with
// coprime exponents (ea, eb) is the class of the slope word eb/ea.
inline bool rank2_primitive_oracle(const freegroup::Word& w) {
  using freegroup::CyclicWord;
  long ea = 0, eb = 0;
  for (auto l : w.letters()) (l.generator() == 0 ? ea : eb) += l.is_inverse() ? -1 : 1;
  if (std::gcd(ea, eb) != 1) return false;
  const auto expected = (ea > 0 || (ea == 0 && eb > 0)) ? freegroup::primitive_of_slope(eb, ea)
                                                        : freegroup::invert(freegroup::primitive_of_slope(-eb, -ea));
  return CyclicWord::of(expected) == CyclicWord::of(w);
}

// g occurs in the cyclic word c, reading c around the circle.
inline bool occurs_cyclically(const std::string& g, const std::string& c) {
  if (c.empty()) return g.empty();
  std::string wrapped = c;
  while (wrapped.size() < c.size() + g.size()) wrapped += c;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (wrapped.compare(i, g.size(), g) == 0) return true;
  }
  return false;
}

}  // namespace pstab::testing
