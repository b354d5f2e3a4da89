#include "pstab/freegroup/whitehead_graph.hpp"

#include <string>

#include "pstab/error.hpp"

namespace pstab::freegroup {

namespace {

// Connectivity of the vertex set `active` (minus `removed`) using edges among them.
bool connected_among(const WhiteheadGraph& g, const std::vector<bool>& active, int removed) {
  const int n = g.vertex_count();
  int start = -1;
  int total = 0;
  for (int v = 0; v < n; ++v) {
    if (v == removed || !active[v]) continue;
    ++total;
    if (start < 0) start = v;
  }
  if (total <= 1) return true;

  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbours(u)) {
      if (w == removed || !active[w] || seen[w]) continue;
      seen[w] = true;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == total;
}

}  // namespace

WhiteheadGraph::WhiteheadGraph(int rank) : rank_(rank) {
  if (rank < 1) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  counts_.assign(static_cast<std::size_t>(4 * rank * rank), 0);
}

void WhiteheadGraph::add_edge(Letter x, Letter y) {
  const int u = x.key();
  const int v = y.key();
  if (u >= vertex_count() || v >= vertex_count()) {
    throw Error(ErrorCode::InvalidLetter, "edge endpoint outside the graph's rank");
  }
  ++counts_[index(u, v)];
  if (u != v) ++counts_[index(v, u)];
  ++edge_count_;
}

int WhiteheadGraph::multiplicity(Letter x, Letter y) const {
  const int u = x.key();
  const int v = y.key();
  if (u >= vertex_count() || v >= vertex_count()) return 0;
  return counts_[index(u, v)];
}

int WhiteheadGraph::degree(int vertex) const {
  int d = 0;
  for (int v = 0; v < vertex_count(); ++v) d += counts_[index(vertex, v)];
  return d;
}

std::vector<int> WhiteheadGraph::neighbours(int vertex) const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v) {
    if (counts_[index(vertex, v)] > 0) out.push_back(v);
  }
  return out;
}

WhiteheadGraph whitehead_graph(const Word& w, bool closed) {
  if (closed && !w.is_cyclically_reduced()) {
    throw Error(ErrorCode::ClosedOnNonCyclicallyReduced,
                "closed Whitehead graph needs a cyclically reduced word, got " + w.to_string());
  }
  WhiteheadGraph g(w.rank());
  const auto& letters = w.letters();
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) g.add_edge(letters[i], letters[i + 1].inverse());
  if (closed && !letters.empty()) g.add_edge(letters.back(), letters.front().inverse());
  return g;
}

bool is_connected(const WhiteheadGraph& g) {
  std::vector<bool> all(static_cast<std::size_t>(g.vertex_count()), true);
  return connected_among(g, all, -1);
}

bool has_cutpoint(const WhiteheadGraph& g) {
  const int n = g.vertex_count();
  std::vector<bool> active(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) active[v] = g.degree(v) > 0;
  for (int v = 0; v < n; ++v) {
    if (active[v] && !connected_among(g, active, v)) return true;
  }
  return false;
}

std::string_view to_string(BlockingReason reason) noexcept {
  switch (reason) {
    case BlockingReason::ConnectedNoCutpoint: return "CONNECTED_NO_CUTPOINT";
    case BlockingReason::Disconnected: return "DISCONNECTED";
    case BlockingReason::HasCutpoint: return "HAS_CUTPOINT";
    case BlockingReason::TooShort: return "TOO_SHORT";
  }
  return "UNKNOWN";
}

BlockingReason blocking_reason_from_string(std::string_view name) {
  for (auto r : {BlockingReason::ConnectedNoCutpoint, BlockingReason::Disconnected, BlockingReason::HasCutpoint,
                 BlockingReason::TooShort}) {
    if (to_string(r) == name) return r;
  }
  throw Error(ErrorCode::ParseError, "unknown blocking reason '" + std::string(name) + "'");
}

BlockingCertificate blocking_certificate(const Word& w) {
  if (w.empty()) return {w, false, BlockingReason::TooShort};
  const auto g = whitehead_graph(w, false);
  if (!is_connected(g)) return {w, false, BlockingReason::Disconnected};
  if (has_cutpoint(g)) return {w, false, BlockingReason::HasCutpoint};
  return {w, true, BlockingReason::ConnectedNoCutpoint};
}

}  // namespace pstab::freegroup
