#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "movtk/error.hpp"
#include "movtk/tournament.hpp"

namespace movtk {

/// Limits for the exact reversal-set searches.
struct SearchOptions {
  std::uint64_t budget = std::uint64_t{1} << 24;  // reversal sets examined
  int max_cardinality = -1;                        // -1: unlimited
};

/// Smallest L with 2^L >= n.
inline int ceil_log2(int n) {
  int l = 0;
  while ((1LL << l) < n) ++l;
  return l;
}

namespace detail {

// Sorted-index-list lexicographic order on subsets encoded as bit masks.
inline bool lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const int d = std::countr_zero(a ^ b);
  const std::uint64_t above = ~((std::uint64_t{2} << d) - 1);
  if ((a >> d) & 1) return (b & above) != 0;
  return (a & above) == 0;
}

}  // namespace detail

/// Best-first enumeration of reversal sets in nondecreasing total weight.
///
/// Edges are sorted by (weight, from, to). From a set whose largest sorted
/// index is j, the successors are "append j+1" and "replace j by j+1", so each
/// subset is generated exactly once and never before a cheaper one. Ties in
/// weight are broken by the lexicographic order of sorted indices. Returns the
/// first set whose reversal satisfies `accept`.
///
/// If `upper` is given it must already satisfy `accept`; it is returned as
/// soon as every cheaper set has been ruled out. Throws BudgetExceeded after
/// `budget` examined sets, never returns a non-optimal answer.
template <class Accept>
std::optional<ReversalSet> best_first_reversal(const Tournament& t, const Weighting& w, Accept&& accept,
                                               const SearchOptions& opts,
                                               const std::optional<ReversalSet>& upper = std::nullopt) {
  std::vector<Edge> edges = t.edges();
  if (edges.size() > 64) throw BudgetExceeded("exact search supports at most 64 edges (n <= 11)");
  std::stable_sort(edges.begin(), edges.end(), [&](Edge a, Edge b) { return w(a) < w(b); });
  const int m = static_cast<int>(edges.size());
  const int cap = opts.max_cardinality < 0 ? m : std::min(m, opts.max_cardinality);

  auto cost_of = [&](std::uint64_t mask) {
    double c = 0.0;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1) c += w(edges[i]);
    return c;
  };
  auto edges_of = [&](std::uint64_t mask) {
    std::vector<Edge> out;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1) out.push_back(edges[i]);
    return out;
  };

  struct Node {
    double cost;
    std::uint64_t mask;
    int last;
  };
  auto worse = [](const Node& a, const Node& b) {
    if (a.cost != b.cost) return a.cost > b.cost;
    return detail::lex_less(b.mask, a.mask);
  };
  std::priority_queue<Node, std::vector<Node>, decltype(worse)> heap(worse);

  std::uint64_t examined = 0;
  auto examine = [&](std::uint64_t mask) {
    if (++examined > opts.budget) throw BudgetExceeded("exact search exceeded its budget of " +
                                                       std::to_string(opts.budget) + " reversal sets");
    std::vector<Edge> set = edges_of(mask);
    return accept(apply_reversals(t, set)) ? std::optional<ReversalSet>(ReversalSet::of(t, w, std::move(set)))
                                           : std::nullopt;
  };

  if (auto hit = examine(0)) return hit;
  if (m > 0 && cap > 0) heap.push({cost_of(1), 1, 0});
  constexpr double kEps = 1e-9;
  while (!heap.empty()) {
    Node node = heap.top();
    heap.pop();
    if (upper && node.cost > upper->cost + kEps) return upper;
    if (auto hit = examine(node.mask)) return hit;
    const int next = node.last + 1;
    if (next >= m) continue;
    const std::uint64_t bit = std::uint64_t{1} << next;
    if (std::popcount(node.mask) < cap) heap.push({cost_of(node.mask | bit), node.mask | bit, next});
    const std::uint64_t swapped = (node.mask & ~(std::uint64_t{1} << node.last)) | bit;
    heap.push({cost_of(swapped), swapped, next});
  }
  return upper;
}

}  // namespace movtk
