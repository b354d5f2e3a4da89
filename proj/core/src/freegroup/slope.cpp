#include "pstab/freegroup/slope.hpp"

#include <numeric>
#include <vector>

#include "pstab/error.hpp"

namespace pstab::freegroup {

Slope Slope::make(std::int64_t p, std::int64_t q) {
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorCode::NotCoprime, "slope " + std::to_string(p) + "/" + std::to_string(q) + " is not coprime");
  }
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return Slope{p, q};
}

Word primitive_of_slope(std::int64_t p, std::int64_t q) {
  const Slope s = Slope::make(p, q);
  const bool negative = s.p < 0;
  const std::int64_t tp = negative ? -s.p : s.p;
  const std::int64_t tq = s.q;

  const Letter a(1);
  const Letter b(negative ? -2 : 2);
  std::vector<Letter> left{a};
  std::vector<Letter> right{b};
  std::int64_t lp = 0, lq = 1, rp = 1, rq = 0;

  if (tp == 0) return Word::reduce(left, 2);
  if (tq == 0) return Word::reduce(right, 2);

  // Stern-Brocot descent; each step replaces one endpoint by the mediant.
  for (;;) {
    const std::int64_t mp = lp + rp;
    const std::int64_t mq = lq + rq;
    std::vector<Letter> mid(left);
    mid.insert(mid.end(), right.begin(), right.end());
    if (mp == tp && mq == tq) return Word::reduce(mid, 2);
    if (tp * mq < mp * tq) {
      rp = mp;
      rq = mq;
      right = std::move(mid);
    } else {
      lp = mp;
      lq = mq;
      left = std::move(mid);
    }
  }
}

}  // namespace pstab::freegroup
