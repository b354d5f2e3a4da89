#pragma once

#include <span>
#include <string>
#include <vector>

#include "pstab/freegroup/word.hpp"

namespace pstab::freegroup {

// Whitehead automorphisms of F_rank.
//   Permutation (type I): each generator goes to a signed generator.
//   Multiplier (type II), written (A, a) with a in A and a^-1 not in A:
//     a -> a, and for x not in {a, a^-1}:
//     x -> x a      if x in A, x^-1 not in A
//     x -> a^-1 x   if x^-1 in A, x not in A
//     x -> a^-1 x a if both
//     x -> x        otherwise
class WhiteheadAutomorphism {
 public:
  enum class Kind { Permutation, Multiplier };

  static WhiteheadAutomorphism identity(int rank);
  // images[i] is the image of generator i.
  static WhiteheadAutomorphism permutation(std::vector<Letter> images, int rank);
  // `others` is A minus the multiplier itself.
  static WhiteheadAutomorphism multiplier(Letter a, std::span<const Letter> others, int rank);

  int rank() const noexcept { return rank_; }
  Kind kind() const noexcept { return kind_; }
  const Word& image(int generator) const { return images_.at(static_cast<std::size_t>(generator)); }
  const std::vector<Word>& images() const noexcept { return images_; }

  WhiteheadAutomorphism inverse() const;
  std::string to_string() const;

  friend bool operator==(const WhiteheadAutomorphism& a, const WhiteheadAutomorphism& b) {
    return a.rank_ == b.rank_ && a.images_ == b.images_;
  }

 private:
  WhiteheadAutomorphism(int rank, Kind kind) : rank_(rank), kind_(kind) {}

  int rank_;
  Kind kind_;
  std::vector<Word> images_;
  // Multiplier data; empty for permutations.
  std::vector<Letter> set_;
  std::vector<Letter> perm_;
};

Word apply_automorphism(const WhiteheadAutomorphism& phi, const Word& w);

// Every non-identity multiplier automorphism, in the fixed order used by the
// minimizer: multiplier letter by key, then subset bitmask ascending.
std::vector<WhiteheadAutomorphism> whitehead_moves(int rank);

}  // namespace pstab::freegroup
