#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "pstab/freegroup/word.hpp"

namespace pstab::freegroup {

// Multigraph on the 2n letters (vertex index = Letter::key()). For each
// adjacent pair xy of the word there is one edge x -- y^-1.
class WhiteheadGraph {
 public:
  explicit WhiteheadGraph(int rank);

  int rank() const noexcept { return rank_; }
  int vertex_count() const noexcept { return 2 * rank_; }

  void add_edge(Letter x, Letter y);
  int multiplicity(Letter x, Letter y) const;
  int degree(int vertex) const;
  std::size_t edge_count() const noexcept { return edge_count_; }

  // Distinct neighbours of a vertex, ignoring multiplicity.
  std::vector<int> neighbours(int vertex) const;

 private:
  int index(int u, int v) const noexcept { return u * 2 * rank_ + v; }

  int rank_;
  std::vector<int> counts_;
  std::size_t edge_count_ = 0;
};

// closed == true gives Wh(w) (wrap-around pair counted; w must be
// cyclically reduced), false gives Wh'(w).
WhiteheadGraph whitehead_graph(const Word& w, bool closed);
inline WhiteheadGraph whitehead_graph(const CyclicWord& c) { return whitehead_graph(c.as_word(), true); }

// Connectivity over all 2n vertices, isolated ones included.
bool is_connected(const WhiteheadGraph& g);

// Cutpoint test over the vertices that carry edges; isolated vertices are
// ignored here (they already fail is_connected).
bool has_cutpoint(const WhiteheadGraph& g);

enum class BlockingReason { ConnectedNoCutpoint, Disconnected, HasCutpoint, TooShort };

std::string_view to_string(BlockingReason reason) noexcept;
BlockingReason blocking_reason_from_string(std::string_view name);

struct BlockingCertificate {
  Word word;
  bool certified;
  BlockingReason reason;
};

// Certifies w as primitive-blocking when Wh'(w) is connected on all 2n
// vertices and has no cutpoint. The empty word is TooShort.
BlockingCertificate blocking_certificate(const Word& w);

}  // namespace pstab::freegroup
