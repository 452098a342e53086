#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "movtk/error.hpp"
#include "movtk/mov_result.hpp"
#include "movtk/optim/bounded_cut.hpp"
#include "movtk/optim/digraph.hpp"
#include "movtk/search.hpp"
#include "movtk/solutions.hpp"
#include "movtk/tournament.hpp"

namespace movtk {

namespace detail {

inline void require_alternative(const Tournament& t, int x) {
  if (x < 0 || x >= t.size())
    throw InvalidArgument("alternative " + std::to_string(x) + " out of range for n = " + std::to_string(t.size()));
  if (t.size() < 2) throw InvalidArgument("margin of victory needs at least two alternatives");
}

inline void require_winner(const Tournament& t, const SolutionId& s, int x) {
  require_alternative(t, x);
  if (!is_winner(t, s, x)) throw InvalidArgument(t.label(x) + " is not in " + s.name() + "(T)");
}

inline void require_nonwinner(const Tournament& t, const SolutionId& s, int x) {
  require_alternative(t, x);
  if (is_winner(t, s, x)) throw InvalidArgument(t.label(x) + " is already in " + s.name() + "(T)");
}

// Cheapest way to turn some y != x into a Condorcet winner: reverse every
// edge into y. Works as a destructive set for any Condorcet-consistent S.
inline ReversalSet condorcet_takeover(const Tournament& t, const Weighting& w, int x) {
  std::optional<ReversalSet> best;
  for (int y = 0; y < t.size(); ++y) {
    if (y == x) continue;
    std::vector<Edge> in;
    for (int z : dominators(t, y)) in.push_back({z, y});
    ReversalSet r = ReversalSet::of(t, w, std::move(in));
    if (!best || r.cost < best->cost) best = std::move(r);
  }
  return *best;
}

}  // namespace detail

/// Margin of victory of a Copeland winner.
///
/// For every rival y, either leave (x,y) alone or reverse it, then close the
/// remaining outdegree gap with the cheapest edges that each shift it by one:
/// outgoing edges of x and incoming edges of y.
inline MovResult mov_copeland_winner(const Tournament& t, const Weighting& w, int x) {
  detail::require_winner(t, SolutionId::copeland(), x);
  std::optional<ReversalSet> best;
  for (int y = 0; y < t.size(); ++y) {
    if (y == x) continue;
    const int gap = t.outdegree(x) - t.outdegree(y);
    std::vector<Edge> pool;
    for (int z : dominion(t, x))
      if (z != y) pool.push_back({x, z});
    for (int z : dominators(t, y))
      if (z != x) pool.push_back({z, y});
    std::stable_sort(pool.begin(), pool.end(), [&](Edge a, Edge b) { return w(a) < w(b); });

    auto consider = [&](std::vector<Edge> base, int need) {
      if (need > static_cast<int>(pool.size())) return;
      base.insert(base.end(), pool.begin(), pool.begin() + std::max(need, 0));
      ReversalSet r = ReversalSet::of(t, w, std::move(base));
      if (!best || r.cost < best->cost) best = std::move(r);
    };
    consider({}, gap + 1);
    if (t.beats(x, y)) consider({{x, y}}, gap - 1);
  }
  return {best->cost, *best, method::kCopelandGreedy};
}

/// Margin of victory of a k-king (k = 2 is the uncovered set, k >= n-1 the top
/// cycle): the weight of a minimum k-bounded x-cut, whose arcs form a minimum
/// destructive reversal set.
inline MovResult mov_kkings_winner(const Tournament& t, const Weighting& w, int x, int k,
                                   const optim::CutLimits& limits = {}) {
  const SolutionId s = SolutionId::kings(k).normalized(t.size());
  detail::require_winner(t, s, x);
  const optim::Digraph g = optim::Digraph::from_tournament(t, w);
  const optim::BoundedCut cut = optim::bounded_x_cut(g, x, s.reach_bound(t.size()), limits);
  std::vector<Edge> edges;
  for (int id : cut.arcs) edges.push_back({g.arc(id).from, g.arc(id).to});
  ReversalSet r = ReversalSet::of(t, w, std::move(edges));
  if (is_winner(apply_reversals(t, r), s, x))
    throw std::logic_error("bounded cut for " + t.label(x) + " is not a destructive reversal set");
  return {r.cost, std::move(r), method::kBoundedCut};
}

/// Exact margin of victory of a winner by best-first search over reversal
/// sets. Unweighted searches stop at cardinality floor(n/2).
inline MovResult exact_mov_winner(const Tournament& t, const Weighting& w, int x, const SolutionId& s,
                                  const SearchOptions& opts = {}) {
  const SolutionId sol = s.normalized(t.size());
  detail::require_winner(t, sol, x);
  SearchOptions o = opts;
  if (w.is_unit()) {
    const int cap = t.size() / 2;
    o.max_cardinality = o.max_cardinality < 0 ? cap : std::min(o.max_cardinality, cap);
  }
  auto found = best_first_reversal(
      t, w, [&](const Tournament& tr) { return !is_winner(tr, sol, x); }, o, detail::condorcet_takeover(t, w, x));
  return {found->cost, *found, method::kBestFirst};
}

/// Margin of victory of a Banks winner (exact search).
inline MovResult mov_banks_winner(const Tournament& t, const Weighting& w, int x, const SearchOptions& opts = {}) {
  return exact_mov_winner(t, w, x, SolutionId::banks(), opts);
}

}  // namespace movtk
