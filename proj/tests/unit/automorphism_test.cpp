#include <gtest/gtest.h>

#include <set>

#include "pstab/error.hpp"
#include "pstab/freegroup/automorphism.hpp"
#include "support/generators.hpp"

namespace pstab::freegroup {
namespace {

const Letter a(1), A(-1), b(2), B(-2);

Word W(std::string_view s, int rank = 2) { return Word::parse(s, rank); }

Word compose_apply(const WhiteheadAutomorphism& outer, const WhiteheadAutomorphism& inner, const Word& w) {
  return apply_automorphism(outer, apply_automorphism(inner, w));
}

TEST(Automorphism, Examples) {
  const auto swap = WhiteheadAutomorphism::permutation({b, a}, 2);
  EXPECT_EQ(apply_automorphism(swap, W("ab")).to_string(), "ba");

  const std::vector<Letter> set_b{b};
  const auto nielsen = WhiteheadAutomorphism::multiplier(a, set_b, 2);
  EXPECT_EQ(apply_automorphism(nielsen, W("b")).to_string(), "ba");
  EXPECT_EQ(apply_automorphism(nielsen, W("a")).to_string(), "a");

  const auto id = WhiteheadAutomorphism::identity(2);
  EXPECT_EQ(apply_automorphism(id, W("abAAB")), W("abAAB"));
}

TEST(Automorphism, MultiplierCases) {
  // A = {a, b, B}: b^+-1 both in A, so b -> A b a.
  const std::vector<Letter> both{b, B};
  EXPECT_EQ(WhiteheadAutomorphism::multiplier(a, both, 2).image(1).to_string(), "Aba");
  // A = {a, B}: only b^-1 in A, so b -> A b.
  const std::vector<Letter> inv_only{B};
  EXPECT_EQ(WhiteheadAutomorphism::multiplier(a, inv_only, 2).image(1).to_string(), "Ab");
  // Empty A - a: identity on b.
  EXPECT_EQ(WhiteheadAutomorphism::multiplier(a, {}, 2).image(1).to_string(), "b");
  EXPECT_THROW(WhiteheadAutomorphism::multiplier(a, std::vector<Letter>{A}, 2), Error);
  EXPECT_THROW(WhiteheadAutomorphism::multiplier(Letter(3), {}, 2), Error);
}

TEST(Automorphism, PermutationValidation) {
  EXPECT_THROW(WhiteheadAutomorphism::permutation({a, a}, 2), Error);
  EXPECT_THROW(WhiteheadAutomorphism::permutation({a}, 2), Error);
  const auto p = WhiteheadAutomorphism::permutation({B, a}, 2);
  EXPECT_EQ(p.kind(), WhiteheadAutomorphism::Kind::Permutation);
  EXPECT_EQ(apply_automorphism(p, W("abA")).to_string(), "Bab");
}

TEST(Automorphism, RankMismatch) {
  try {
    apply_automorphism(WhiteheadAutomorphism::identity(3), W("ab"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankMismatch);
  }
}

TEST(Automorphism, ToString) {
  const std::vector<Letter> set_b{b};
  EXPECT_EQ(WhiteheadAutomorphism::multiplier(a, set_b, 2).to_string(), "(a;{b})");
  EXPECT_EQ(WhiteheadAutomorphism::permutation({b, a}, 2).to_string(), "[b,a]");
}

TEST(WhiteheadMoves, CountOrderAndDistinct) {
  for (int rank = 1; rank <= 4; ++rank) {
    const auto moves = whitehead_moves(rank);
    const std::size_t n2 = static_cast<std::size_t>(2 * rank);
    EXPECT_EQ(moves.size(), n2 * ((std::size_t{1} << (n2 - 2)) - 1)) << rank;
    std::set<std::string> names;
    for (const auto& m : moves) names.insert(m.to_string());
    EXPECT_EQ(names.size(), moves.size());
  }
  const auto moves = whitehead_moves(2);
  EXPECT_EQ(moves.front().to_string(), "(a;{b})");
  EXPECT_THROW(whitehead_moves(9), Error);
}

TEST(AutomorphismProperties, InverseUndoesMove) {
  auto rng = testing::make_rng(21);
  for (int rank = 2; rank <= 3; ++rank) {
    for (const auto& phi : whitehead_moves(rank)) {
      const auto inv = phi.inverse();
      for (int trial = 0; trial < 5; ++trial) {
        const auto w = testing::random_reduced_word(rng, rank, testing::uniform_int(rng, 0, 10));
        ASSERT_EQ(compose_apply(inv, phi, w), w) << phi.to_string();
        ASSERT_EQ(compose_apply(phi, inv, w), w) << phi.to_string();
      }
    }
  }
}

TEST(AutomorphismProperties, PermutationInverse) {
  const auto p = WhiteheadAutomorphism::permutation({Letter(-3), Letter(1), Letter(-2)}, 3);
  auto rng = testing::make_rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const auto w = testing::random_reduced_word(rng, 3, 9);
    EXPECT_EQ(compose_apply(p.inverse(), p, w), w);
  }
}

TEST(AutomorphismProperties, Homomorphism) {
  auto rng = testing::make_rng(23);
  const auto moves = whitehead_moves(2);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& phi = moves[static_cast<std::size_t>(testing::uniform_int(rng, 0, static_cast<int>(moves.size()) - 1))];
    const auto u = testing::random_reduced_word(rng, 2, testing::uniform_int(rng, 0, 8));
    const auto v = testing::random_reduced_word(rng, 2, testing::uniform_int(rng, 0, 8));
    EXPECT_EQ(apply_automorphism(phi, u * v), apply_automorphism(phi, u) * apply_automorphism(phi, v));
  }
}

}  // namespace
}  // namespace pstab::freegroup
