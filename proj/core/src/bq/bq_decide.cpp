#include "pstab/bq/bq_decide.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pstab/error.hpp"
#include "pstab/moebius/moebius_map.hpp"

namespace pstab::bq {

namespace {

struct Region {
  std::int64_t p;
  std::int64_t q;
  Complex trace;
};

// Directed edge between regions x and y, pointing away from z.
struct Edge {
  Region x;
  Region y;
  Region z;
  int depth;
};

bool add_checked(std::int64_t a, std::int64_t b, std::int64_t& out) { return !__builtin_add_overflow(a, b, &out); }
bool sub_checked(std::int64_t a, std::int64_t b, std::int64_t& out) { return !__builtin_sub_overflow(a, b, &out); }

// Slope of the region across edge (x, y) from z: x + y or x - y, whichever is not +-z.
// Overflowed slopes are reported as 0/0.
void far_slope(const Region& x, const Region& y, const Region& z, std::int64_t& p, std::int64_t& q) {
  std::int64_t sp, sq;
  if (add_checked(x.p, y.p, sp) && add_checked(x.q, y.q, sq)) {
    const bool is_z = (sp == z.p && sq == z.q) || (sp == -z.p && sq == -z.q);
    if (!is_z) {
      p = sp;
      q = sq;
      return;
    }
  }
  if (sub_checked(x.p, y.p, sp) && sub_checked(x.q, y.q, sq)) {
    p = sp;
    q = sq;
    return;
  }
  p = 0;
  q = 0;
}

freegroup::Slope normalized(std::int64_t p, std::int64_t q) {
  if (q < 0 || (q == 0 && p < 0)) return {-p, -q};
  return {p, q};
}

bool edge_escapes(Complex x, Complex y, Complex far, double delta) {
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  return std::min(ax, ay) >= 2.0 + delta && std::abs(far) >= ax + ay + delta;
}

// Neighbours of a region with trace x satisfy u_{j+1} = x u_j - u_{j-1}, so
// u_j = A l^j + B l^-j with l + 1/l = x. Given u_0, u_1 this returns true when
// |u_j| stays above the level at which every edge leaving the periphery
// (u_j, u_{j+1}) escapes by edge_escapes, for all j >= 1.
bool periphery_escapes(Complex x, Complex u0, Complex u1, double delta) {
  const Complex s = std::sqrt(x * x - 4.0);
  Complex lambda = (x + s) / 2.0;
  if (std::abs(lambda) < 1.0) lambda = 1.0 / lambda;
  const Complex spread = lambda - 1.0 / lambda;
  if (std::abs(spread) < 1e-12) return false;
  const Complex A = (u1 - u0 / lambda) / spread;
  const Complex B = u0 - A;
  const double mod = std::abs(lambda);
  const double floor_j1 = std::abs(A) * mod - std::abs(B) / mod;
  // a, b >= L  =>  ab - |x| - a - b >= (L - 1)^2 - 1 - |x|.
  const double needed = std::max(2.0 + delta, 1.0 + std::sqrt(1.0 + std::abs(x) + delta));
  return floor_j1 >= needed + delta;
}

class Search {
 public:
  Search(const BqOptions& opts) : opts_(opts) {}

  BqVerdict run(const MarkoffTriple& t) {
    if (opts_.budget <= 0) return verdict_;
    verdict_.nodes_explored = 1;
    verdict_.depth_max = 0;
    const Region x{0, 1, t.x()};
    const Region y{1, 0, t.y()};
    const Region z{1, 1, t.z()};
    for (const auto& r : {x, y, z}) {
      if (!visit(r)) return verdict_;
    }
    // Pushed in reverse so the (x, y) edge is explored first.
    stack_.push_back({x, z, y, 1});
    stack_.push_back({y, z, x, 1});
    stack_.push_back({x, y, z, 1});

    while (!stack_.empty()) {
      const Edge e = stack_.back();
      stack_.pop_back();
      const Complex far = e.x.trace * e.y.trace - e.z.trace;
      if (edge_escapes(e.x.trace, e.y.trace, far, opts_.delta) ||
          periphery_escapes(e.x.trace, e.z.trace, e.y.trace, opts_.delta) ||
          periphery_escapes(e.y.trace, e.z.trace, e.x.trace, opts_.delta)) {
        continue;
      }
      if (verdict_.nodes_explored >= opts_.budget) {
        verdict_.kind = BqKind::Inconclusive;
        return verdict_;
      }
      ++verdict_.nodes_explored;
      verdict_.depth_max = std::max(verdict_.depth_max, e.depth);
      Region w{0, 0, far};
      far_slope(e.x, e.y, e.z, w.p, w.q);
      if (!visit(w)) return verdict_;
      stack_.push_back({e.y, w, e.x, e.depth + 1});
      stack_.push_back({e.x, w, e.y, e.depth + 1});
    }
    verdict_.kind = BqKind::Certified;
    return verdict_;
  }

 private:
  // Records the region; false when the search has reached a NOT_BQ verdict.
  bool visit(const Region& r) {
    const bool non_lox = moebius::is_non_loxodromic_trace(r.trace, opts_.tol);
    if (non_lox || std::abs(r.trace) <= 2.0) {
      verdict_.witnesses.push_back({normalized(r.p, r.q), r.trace});
      if (!non_lox) ++small_;
    }
    if (non_lox || small_ > opts_.small_trace_bound) {
      verdict_.kind = BqKind::NotBqWitness;
      return false;
    }
    return true;
  }

  BqOptions opts_;
  BqVerdict verdict_;
  std::vector<Edge> stack_;
  int small_ = 0;
};

}  // namespace

std::string_view to_string(BqKind kind) noexcept {
  switch (kind) {
    case BqKind::Certified: return "BQ_CERTIFIED";
    case BqKind::NotBqWitness: return "NOT_BQ_WITNESS";
    case BqKind::Inconclusive: return "INCONCLUSIVE";
  }
  return "UNKNOWN";
}

BqKind bq_kind_from_string(std::string_view name) {
  for (auto k : {BqKind::Certified, BqKind::NotBqWitness, BqKind::Inconclusive}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::ParseError, "unknown BQ verdict '" + std::string(name) + "'");
}

BqVerdict bq_decide(const MarkoffTriple& t, const BqOptions& opts) {
  if (opts.small_trace_bound < 0) throw Error(ErrorCode::InvalidArgument, "small_trace_bound must be nonnegative");
  return Search(opts).run(t);
}

}  // namespace pstab::bq
