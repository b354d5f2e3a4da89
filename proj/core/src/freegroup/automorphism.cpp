#include "pstab/freegroup/automorphism.hpp"

#include <algorithm>
#include <cstdlib>

#include "pstab/error.hpp"

namespace pstab::freegroup {

WhiteheadAutomorphism WhiteheadAutomorphism::identity(int rank) {
  std::vector<Letter> images;
  for (int i = 0; i < rank; ++i) images.emplace_back(i + 1);
  return permutation(std::move(images), rank);
}

WhiteheadAutomorphism WhiteheadAutomorphism::permutation(std::vector<Letter> images, int rank) {
  if (static_cast<int>(images.size()) != rank) {
    throw Error(ErrorCode::RankMismatch, "permutation needs one image per generator");
  }
  std::vector<bool> hit(static_cast<std::size_t>(rank), false);
  for (Letter l : images) {
    const int g = l.generator();
    if (g >= rank || hit[g]) throw Error(ErrorCode::InvalidArgument, "images do not form a signed permutation");
    hit[g] = true;
  }
  WhiteheadAutomorphism phi(rank, Kind::Permutation);
  for (Letter l : images) phi.images_.push_back(Word::reduce(std::span<const Letter>(&l, 1), rank));
  phi.perm_ = std::move(images);
  return phi;
}

WhiteheadAutomorphism WhiteheadAutomorphism::multiplier(Letter a, std::span<const Letter> others, int rank) {
  if (a.generator() >= rank) throw Error(ErrorCode::InvalidLetter, "multiplier outside rank");
  std::vector<bool> in_set(static_cast<std::size_t>(2 * rank), false);
  in_set[a.key()] = true;
  for (Letter l : others) {
    if (l.generator() >= rank) throw Error(ErrorCode::InvalidLetter, "set letter outside rank");
    if (l == a.inverse()) throw Error(ErrorCode::InvalidArgument, "Whitehead set may not contain the multiplier's inverse");
    in_set[l.key()] = true;
  }

  WhiteheadAutomorphism phi(rank, Kind::Multiplier);
  const Letter ainv = a.inverse();
  for (int g = 0; g < rank; ++g) {
    const Letter x(g + 1);
    std::vector<Letter> img;
    if (g == a.generator()) {
      img.push_back(x);
    } else {
      const bool x_in = in_set[x.key()];
      const bool xinv_in = in_set[x.inverse().key()];
      if (xinv_in) img.push_back(ainv);
      img.push_back(x);
      if (x_in) img.push_back(a);
    }
    phi.images_.push_back(Word::reduce(img, rank));
  }
  phi.set_.push_back(a);
  for (int k = 0; k < 2 * rank; ++k) {
    if (in_set[k] && k != a.key()) phi.set_.push_back(Letter::from_key(k));
  }
  return phi;
}

WhiteheadAutomorphism WhiteheadAutomorphism::inverse() const {
  if (kind_ == Kind::Multiplier) {
    // (A, a)^-1 = (A - a + a^-1, a^-1)
    const Letter a = set_.front();
    std::vector<Letter> others(set_.begin() + 1, set_.end());
    return multiplier(a.inverse(), others, rank_);
  }
  std::vector<Letter> inv(static_cast<std::size_t>(rank_), Letter(1));
  for (int g = 0; g < rank_; ++g) {
    const Letter l = perm_[g];
    inv[l.generator()] = l.is_inverse() ? Letter(-(g + 1)) : Letter(g + 1);
  }
  return permutation(std::move(inv), rank_);
}

std::string WhiteheadAutomorphism::to_string() const {
  std::string s;
  if (kind_ == Kind::Multiplier) {
    s = "(";
    s += set_.front().to_char();
    s += ";{";
    for (std::size_t i = 1; i < set_.size(); ++i) {
      if (i > 1) s += ",";
      s += set_[i].to_char();
    }
    s += "})";
    return s;
  }
  s = "[";
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (i > 0) s += ",";
    s += perm_[i].to_char();
  }
  s += "]";
  return s;
}

Word apply_automorphism(const WhiteheadAutomorphism& phi, const Word& w) {
  if (phi.rank() != w.rank()) {
    throw Error(ErrorCode::RankMismatch, "automorphism and word have different ranks");
  }
  std::vector<Letter> out;
  out.reserve(w.size() * 3);
  for (Letter l : w.letters()) {
    const Word& img = phi.image(l.generator());
    if (l.is_inverse()) {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) out.push_back(it->inverse());
    } else {
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    }
  }
  return Word::reduce(out, w.rank());
}

std::vector<WhiteheadAutomorphism> whitehead_moves(int rank) {
  if (rank < 1 || rank > 8) throw Error(ErrorCode::RankTooLarge, "move enumeration supports ranks 1..8");
  std::vector<WhiteheadAutomorphism> moves;
  const int letters = 2 * rank;
  for (int ak = 0; ak < letters; ++ak) {
    const Letter a = Letter::from_key(ak);
    std::vector<Letter> pool;
    for (int k = 0; k < letters; ++k) {
      if (k / 2 != ak / 2) pool.push_back(Letter::from_key(k));
    }
    const unsigned long subsets = 1UL << pool.size();
    for (unsigned long mask = 1; mask < subsets; ++mask) {
      std::vector<Letter> others;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (mask & (1UL << i)) others.push_back(pool[i]);
      }
      moves.push_back(WhiteheadAutomorphism::multiplier(a, others, rank));
    }
  }
  return moves;
}

}  // namespace pstab::freegroup
