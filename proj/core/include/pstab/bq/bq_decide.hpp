#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "pstab/bq/markoff.hpp"
#include "pstab/freegroup/slope.hpp"

namespace pstab::bq {

enum class BqKind { Certified, NotBqWitness, Inconclusive };

std::string_view to_string(BqKind kind) noexcept;
BqKind bq_kind_from_string(std::string_view name);

// A primitive slope whose trace is small (|tr| <= 2) or non-loxodromic.
struct BqWitness {
  freegroup::Slope slope;
  Complex trace;

  friend bool operator==(const BqWitness&, const BqWitness&) = default;
};

struct BqVerdict {
  BqKind kind = BqKind::Inconclusive;
  std::int64_t nodes_explored = 0;
  // Every visited slope with |tr| <= 2 or a non-loxodromic trace, in visit order.
  std::vector<BqWitness> witnesses;
  int depth_max = 0;

  friend bool operator==(const BqVerdict&, const BqVerdict&) = default;
};

struct BqOptions {
  std::int64_t budget = 100000;  // tree vertices the search may visit
  int small_trace_bound = 64;    // more small-trace slopes than this is NOT_BQ
  double tol = moebius::kDefaultTol;
  double delta = 1e-6;           // escape margin
};

// Depth-first search of the Farey tree of primitive slopes from the triple
// at (0/1, 1/0, 1/1). A directed edge is pruned when either
//   - both adjacent traces have modulus >= 2 + delta and the far trace
//     exceeds their sum by delta (traces then grow along every descendant), or
//   - the linear recurrence along the periphery of one adjacent region
//     bounds every later neighbour large enough that all edges leaving
//     that periphery satisfy the first rule.
// CERTIFIED when the search closes with at most small_trace_bound small
// traces; NOT_BQ_WITNESS on a non-loxodromic trace or on overflowing the
// bound; INCONCLUSIVE when the budget runs out.
BqVerdict bq_decide(const MarkoffTriple& t, const BqOptions& opts = {});

}  // namespace pstab::bq
