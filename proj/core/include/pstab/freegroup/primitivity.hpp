#pragma once

#include <vector>

#include "pstab/freegroup/automorphism.hpp"
#include "pstab/freegroup/word.hpp"

namespace pstab::freegroup {

struct PrimitivityOptions {
  // The move set has 2n * 2^(2n-2) elements; ranks above the cap are refused.
  int rank_cap = 4;
};

struct Minimization {
  CyclicWord minimal;
  std::vector<WhiteheadAutomorphism> trace;
};

// Greedy peak reduction: applies the first move (in whitehead_moves order)
// that strictly shortens the cyclic word until none does. The terminal
// length is the minimum over the Aut(F_n)-orbit.
Minimization whitehead_minimize(const Word& w, const PrimitivityOptions& opts = {});

bool is_primitive(const Word& w, const PrimitivityOptions& opts = {});

// All conjugacy classes of primitive elements with ||w|| <= max_len (a class
// and its inverse are listed separately), sorted in CyclicWord order.
std::vector<CyclicWord> enumerate_primitive_classes(int rank, int max_len, const PrimitivityOptions& opts = {});

}  // namespace pstab::freegroup
