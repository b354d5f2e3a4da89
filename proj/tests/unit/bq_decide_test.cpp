#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "pstab/bq/bq_decide.hpp"
#include "pstab/error.hpp"
#include "support/generators.hpp"

namespace pstab::bq {
namespace {

bool witnessed(const BqVerdict& v, std::int64_t p, std::int64_t q) {
  const auto s = freegroup::Slope::make(p, q);
  return std::any_of(v.witnesses.begin(), v.witnesses.end(), [&](const BqWitness& w) { return w.slope == s; });
}

// Every slope with |p|, |q| <= 30 whose trace is small must be recorded.
void expect_no_unrecorded_small_traces(const MarkoffTriple& t, const BqVerdict& v) {
  for (int p = -30; p <= 30; ++p) {
    for (int q = 0; q <= 30; ++q) {
      if (std::gcd(p, q) != 1 || (q == 0 && p < 0)) continue;
      const Complex tr = slope_trace(t, p, q);
      if (std::abs(tr) <= 2.0 - 1e-9) {
        EXPECT_TRUE(witnessed(v, p, q)) << p << "/" << q << " trace " << tr;
      }
    }
  }
}

TEST(BqDecide, ModularTorusIsCertified) {
  BqOptions opts;
  opts.budget = 100000;
  const MarkoffTriple t(3.0, 3.0, 3.0);
  const auto v = bq_decide(t, opts);
  EXPECT_EQ(v.kind, BqKind::Certified);
  EXPECT_LE(v.nodes_explored, 100000);
  EXPECT_GE(v.nodes_explored, 1);
  EXPECT_TRUE(v.witnesses.empty());
  expect_no_unrecorded_small_traces(t, v);
}

TEST(BqDecide, EllipticGeneratorIsWitnessed) {
  const auto v = bq_decide(MarkoffTriple(1.0, 3.0, 3.0));
  EXPECT_EQ(v.kind, BqKind::NotBqWitness);
  ASSERT_FALSE(v.witnesses.empty());
  EXPECT_EQ(v.witnesses.front().slope, (freegroup::Slope{0, 1}));
  EXPECT_EQ(v.witnesses.front().trace, Complex(1.0));
}

TEST(BqDecide, ZeroBudget) {
  BqOptions opts;
  opts.budget = 0;
  const auto v = bq_decide(MarkoffTriple(3.0, 3.0, 3.0), opts);
  EXPECT_EQ(v.kind, BqKind::Inconclusive);
  EXPECT_EQ(v.nodes_explored, 0);
  EXPECT_TRUE(v.witnesses.empty());
}

TEST(BqDecide, BudgetExhaustion) {
  // Deep in the interior of a level set far from escape: a near-parabolic commutator
  // slice point needs many nodes; a budget of 1 cannot finish.
  BqOptions opts;
  opts.budget = 1;
  const auto v = bq_decide(MarkoffTriple(2.5, 2.5, 2.5), opts);
  EXPECT_EQ(v.kind, BqKind::Inconclusive);
  EXPECT_EQ(v.nodes_explored, 1);
}

TEST(BqDecide, ParabolicAndIdentityTraces) {
  EXPECT_EQ(bq_decide(MarkoffTriple(2.0, 3.0, 3.0)).kind, BqKind::NotBqWitness);
  EXPECT_EQ(bq_decide(MarkoffTriple(-2.0, 3.0, 3.0)).kind, BqKind::NotBqWitness);
  // Far slope of the root edge: tr(aB) = xy - z = 2.
  const auto v = bq_decide(MarkoffTriple(3.0, 3.0, 7.0));
  EXPECT_EQ(v.kind, BqKind::NotBqWitness);
  EXPECT_TRUE(witnessed(v, -1, 1));
}

TEST(BqDecide, SmallTraceBound) {
  // |tr| <= 2 but non-real traces count toward the bound without failing clause (1).
  const MarkoffTriple t(Complex(0.0, 1.9), Complex(3.0, 0.0), Complex(3.0, 0.5));
  BqOptions strict;
  strict.small_trace_bound = 0;
  const auto v = bq_decide(t, strict);
  EXPECT_EQ(v.kind, BqKind::NotBqWitness);
  ASSERT_EQ(v.witnesses.size(), 1u);
  EXPECT_EQ(v.witnesses.front().slope, (freegroup::Slope{0, 1}));
  strict.small_trace_bound = -1;
  EXPECT_THROW(bq_decide(t, strict), Error);
}

TEST(BqDecide, KindNames) {
  EXPECT_EQ(to_string(BqKind::Certified), "BQ_CERTIFIED");
  EXPECT_EQ(bq_kind_from_string("NOT_BQ_WITNESS"), BqKind::NotBqWitness);
  EXPECT_EQ(bq_kind_from_string("INCONCLUSIVE"), BqKind::Inconclusive);
  EXPECT_THROW(bq_kind_from_string("BQ"), Error);
}

TEST(BqDecideProperties, WitnessesAreGenuine) {
  auto rng = testing::make_rng(91);
  int certified = 0, witnessed_runs = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const MarkoffTriple t(testing::uniform_complex(rng, 4.0), testing::uniform_complex(rng, 4.0),
                          testing::uniform_complex(rng, 4.0));
    BqOptions opts;
    opts.budget = 20000;
    const auto v = bq_decide(t, opts);
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (const auto& w : v.witnesses) {
      EXPECT_TRUE(std::abs(w.trace) <= 2.0 || moebius::is_non_loxodromic_trace(w.trace));
      EXPECT_LT(std::abs(slope_trace(t, w.slope.p, w.slope.q) - w.trace), 1e-6 * std::max(1.0, std::abs(w.trace)));
      EXPECT_TRUE(seen.insert({w.slope.p, w.slope.q}).second) << "slope visited twice";
    }
    if (v.kind == BqKind::Certified) {
      ++certified;
      expect_no_unrecorded_small_traces(t, v);
    }
    if (v.kind == BqKind::NotBqWitness) {
      ++witnessed_runs;
      EXPECT_FALSE(v.witnesses.empty());
    }
  }
  EXPECT_GT(certified, 0);
  EXPECT_GT(witnessed_runs, 0);
}

TEST(BqDecideProperties, LiftSignInvariance) {
  auto rng = testing::make_rng(92);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex x = testing::uniform_complex(rng, 5.0), y = testing::uniform_complex(rng, 5.0),
                  z = testing::uniform_complex(rng, 5.0);
    BqOptions opts;
    opts.budget = 5000;
    const auto base = bq_decide(MarkoffTriple(x, y, z), opts);
    for (const auto& flipped : {MarkoffTriple(-x, -y, z), MarkoffTriple(-x, y, -z), MarkoffTriple(x, -y, -z)}) {
      const auto v = bq_decide(flipped, opts);
      EXPECT_EQ(v.kind, base.kind);
      EXPECT_EQ(v.nodes_explored, base.nodes_explored);
      ASSERT_EQ(v.witnesses.size(), base.witnesses.size());
      for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
        EXPECT_EQ(v.witnesses[i].slope, base.witnesses[i].slope);
        EXPECT_NEAR(std::abs(v.witnesses[i].trace), std::abs(base.witnesses[i].trace), 1e-9);
      }
    }
  }
}

TEST(EscapeProperties, ForwardInvariance) {
  // min(|x|,|y|) >= 2 + d and |z| >= |x| + |y| + d propagate to both children.
  auto rng = testing::make_rng(93);
  const double d = 1e-6;
  int tested = 0;
  while (tested < 10000) {
    const Complex x = std::polar(testing::uniform_real(rng, 2.0 + d, 8.0), testing::uniform_real(rng, 0.0, 6.3));
    const Complex y = std::polar(testing::uniform_real(rng, 2.0 + d, 8.0), testing::uniform_real(rng, 0.0, 6.3));
    const Complex z = std::polar(std::abs(x) + std::abs(y) + d + testing::uniform_real(rng, 0.0, 10.0),
                                 testing::uniform_real(rng, 0.0, 6.3));
    // Children across (x, z) and (y, z): far traces xz - y and yz - x.
    const Complex fx = x * z - y, fy = y * z - x;
    EXPECT_GE(std::abs(fx), std::abs(x) + std::abs(z) + d);
    EXPECT_GE(std::abs(fy), std::abs(y) + std::abs(z) + d);
    EXPECT_GE(std::abs(z), 2.0 + d);
    ++tested;
  }
}

}  // namespace
}  // namespace pstab::bq
