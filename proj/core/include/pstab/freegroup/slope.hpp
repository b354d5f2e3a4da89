#pragma once

#include <cstdint>
#include <string>

#include "pstab/freegroup/word.hpp"

namespace pstab::freegroup {

// A slope p/q in Q u {inf}, stored with q > 0, or (p, q) = (1, 0).
// (p, q) and (-p, -q) name the same slope.
struct Slope {
  std::int64_t p = 0;
  std::int64_t q = 1;

  // Throws NotCoprime unless gcd(|p|, |q|) == 1.
  static Slope make(std::int64_t p, std::int64_t q);

  std::string to_string() const { return std::to_string(p) + "/" + std::to_string(q); }
  friend bool operator==(const Slope&, const Slope&) = default;
};

// Rank-2 primitive word for a slope: w(0/1) = a, w(1/0) = b, and the mediant
// of Farey neighbours l < r gets w(l) w(r). Negative slopes use b^-1 in place
// of b. The abelianization of w(p/q) is (a: q, b: p) up to that sign.
Word primitive_of_slope(std::int64_t p, std::int64_t q);

}  // namespace pstab::freegroup
