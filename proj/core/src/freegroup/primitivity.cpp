#include "pstab/freegroup/primitivity.hpp"

#include <array>
#include <mutex>
#include <set>
#include <string>

#include "pstab/error.hpp"

namespace pstab::freegroup {

namespace {

void check_cap(int rank, const PrimitivityOptions& opts) {
  if (rank > opts.rank_cap) {
    throw Error(ErrorCode::RankTooLarge,
                "rank " + std::to_string(rank) + " exceeds the configured cap " + std::to_string(opts.rank_cap));
  }
}

const std::vector<WhiteheadAutomorphism>& moves_for(int rank) {
  // One table per rank, built on first use.
  constexpr int kMaxRank = 8;
  static std::array<std::once_flag, kMaxRank + 1> once;
  static std::array<std::vector<WhiteheadAutomorphism>, kMaxRank + 1> tables;
  if (rank < 1 || rank > kMaxRank) throw Error(ErrorCode::RankTooLarge, "move tables cover ranks 1..8");
  std::call_once(once[static_cast<std::size_t>(rank)],
                 [rank] { tables[static_cast<std::size_t>(rank)] = whitehead_moves(rank); });
  return tables[static_cast<std::size_t>(rank)];
}

}  // namespace

Minimization whitehead_minimize(const Word& w, const PrimitivityOptions& opts) {
  check_cap(w.rank(), opts);
  const auto& moves = moves_for(w.rank());
  Minimization result{CyclicWord::of(w), {}};
  Word current = result.minimal.as_word();
  bool improved = true;
  while (improved && current.size() > 1) {
    improved = false;
    for (const auto& phi : moves) {
      Word image = apply_automorphism(phi, current);
      if (cyclic_length(image) < current.size()) {
        result.minimal = CyclicWord::of(image);
        current = result.minimal.as_word();
        result.trace.push_back(phi);
        improved = true;
        break;
      }
    }
  }
  return result;
}

bool is_primitive(const Word& w, const PrimitivityOptions& opts) {
  check_cap(w.rank(), opts);
  if (w.empty()) return false;
  return whitehead_minimize(w, opts).minimal.length() == 1;
}

std::vector<CyclicWord> enumerate_primitive_classes(int rank, int max_len, const PrimitivityOptions& opts) {
  if (rank < 1) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  check_cap(rank, opts);
  std::set<CyclicWord> found;
  if (max_len < 1) return {};

  // Reversing a strictly shortening move chain from a primitive class down to
  // a letter gives a chain of classes no longer than the class itself, so a
  // search from the letters that discards classes above max_len is complete.
  const auto& moves = moves_for(rank);
  std::vector<CyclicWord> frontier;
  for (int k = 0; k < 2 * rank; ++k) {
    const Letter l = Letter::from_key(k);
    auto c = CyclicWord::of(Word::reduce(std::span<const Letter>(&l, 1), rank));
    if (found.insert(c).second) frontier.push_back(c);
  }
  while (!frontier.empty()) {
    std::vector<CyclicWord> next;
    for (const auto& c : frontier) {
      const Word w = c.as_word();
      for (const auto& phi : moves) {
        Word image = apply_automorphism(phi, w);
        if (cyclic_length(image) > static_cast<std::size_t>(max_len)) continue;
        auto ic = CyclicWord::of(image);
        if (found.insert(ic).second) next.push_back(std::move(ic));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

}  // namespace pstab::freegroup
