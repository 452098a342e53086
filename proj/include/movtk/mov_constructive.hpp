#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "movtk/error.hpp"
#include "movtk/mov_destructive.hpp"
#include "movtk/mov_result.hpp"
#include "movtk/optim/digraph.hpp"
#include "movtk/optim/min_cost_flow.hpp"
#include "movtk/optim/shortest_path.hpp"
#include "movtk/search.hpp"
#include "movtk/solutions.hpp"
#include "movtk/tournament.hpp"

namespace movtk {

/// Flow network that decides whether x can reach outdegree exactly c while
/// every other alternative stays at or below c.
///
/// Each tournament edge e is a node fed one unit from the source; the unit goes
/// to the tail of e for free (edge kept) or to its head at cost w(e) (edge
/// reversed). x absorbs exactly c units, every other alternative passes at most
/// c units on to the sink.
struct CopelandNetwork {
  optim::FlowNetwork net;
  std::vector<Edge> edges;          // tournament edges, one per edge node
  std::vector<int> reverse_arc;     // per edge: id of the edge-node -> head arc
  int x = -1;
  int c = 0;
};

inline CopelandNetwork build_copeland_network(const Tournament& t, const Weighting& w, int x, int c) {
  const int n = t.size();
  const std::int64_t m = static_cast<std::int64_t>(n) * (n - 1) / 2;
  CopelandNetwork out;
  out.x = x;
  out.c = c;
  out.edges = t.edges();
  auto& net = out.net;
  const int s = net.add_node(-m);
  std::vector<int> edge_node;
  for (std::size_t i = 0; i < out.edges.size(); ++i) edge_node.push_back(net.add_node());
  std::vector<int> alt(n);
  for (int v = 0; v < n; ++v) alt[v] = net.add_node(v == x ? c : 0);
  const int sink = net.add_node(m - c);
  for (std::size_t i = 0; i < out.edges.size(); ++i) {
    const Edge e = out.edges[i];
    net.add_arc(s, edge_node[i], 1, 0.0);
    net.add_arc(edge_node[i], alt[e.from], 1, 0.0);
    out.reverse_arc.push_back(net.add_arc(edge_node[i], alt[e.to], 1, w(e)));
  }
  for (int v = 0; v < n; ++v)
    if (v != x) net.add_arc(alt[v], sink, c, 0.0);
  return out;
}

/// Reversal set encoded by an integral flow on a Copeland network.
inline std::vector<Edge> copeland_reversals(const CopelandNetwork& cn, const std::vector<std::int64_t>& flow) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < cn.edges.size(); ++i)
    if (flow[cn.reverse_arc[i]] > 0) out.push_back(cn.edges[i]);
  return out;
}

/// Margin of victory of a Copeland non-winner: the cheapest feasible
/// min-cost b-flow over target outdegrees c = ceil((n-1)/2) .. n-1.
inline MovResult mov_copeland_nonwinner(const Tournament& t, const Weighting& w, int x) {
  detail::require_nonwinner(t, SolutionId::copeland(), x);
  const int n = t.size();
  std::optional<ReversalSet> best;
  for (int c = n / 2; c <= n - 1; ++c) {
    const CopelandNetwork cn = build_copeland_network(t, w, x, c);
    const optim::BFlow f = optim::min_cost_bflow(cn.net);
    if (!f.feasible) continue;
    ReversalSet r = ReversalSet::of(t, w, copeland_reversals(cn, f.flow));
    if (!best || r.cost < best->cost - 1e-9) best = std::move(r);
  }
  if (!best || !is_winner(apply_reversals(t, *best), SolutionId::copeland(), x))
    throw std::logic_error("Copeland flow produced no constructive reversal set for " + t.label(x));
  return {-best->cost, *best, method::kBFlow};
}

/// Margin of victory of an uncovered-set non-winner, unit weights.
///
/// Searches the smallest Y among the dominators of x such that D(x) + Y
/// dominates every other alternative; reversing (y,x) for y in Y makes x a
/// 2-king. Candidate sets of each size are tried in colex order.
inline MovResult mov_uc_nonwinner_unweighted(const Tournament& t, int x) {
  detail::require_nonwinner(t, SolutionId::uncovered_set(), x);
  const int n = t.size();
  const std::vector<int> dom = dominion(t, x);
  const std::vector<int> cand = dominators(t, x);
  const int d = static_cast<int>(cand.size());

  std::vector<char> base(n, 0);
  base[x] = 1;
  for (int u : dom) {
    base[u] = 1;
    for (int z = 0; z < n; ++z)
      if (t.beats(u, z)) base[z] = 1;
  }
  auto dominates_all = [&](const std::vector<int>& pick) {
    std::vector<char> hit = base;
    for (int i : pick) {
      const int y = cand[i];
      hit[y] = 1;
      for (int z = 0; z < n; ++z)
        if (t.beats(y, z)) hit[z] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  };

  for (int size = 1; size <= d; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      if (dominates_all(pick)) {
        std::vector<Edge> edges;
        for (int i : pick) edges.push_back({cand[i], x});
        ReversalSet r = ReversalSet::of(t, Weighting::unit(t), std::move(edges));
        return {-r.cost, std::move(r), method::kDominatingAugmentation};
      }
      // Next combination in colex order.
      int i = 0;
      while (i < size && pick[i] + 1 == (i + 1 < size ? pick[i + 1] : d)) ++i;
      if (i == size) break;
      ++pick[i];
      for (int j = 0; j < i; ++j) pick[j] = j;
    }
  }
  throw std::logic_error("no dominating augmentation found for " + t.label(x));
}

/// Margin of victory of a top-cycle non-winner.
///
/// With components T_1 (top) .. T_m and x in T_r, the auxiliary graph has a
/// node per component T_1..T_r and an arc v_j -> v_i (i < j <= r) for the
/// cheapest edge from T_i into T_j .. T_m. Reversing the edges of a shortest
/// v_r -> v_1 path lets x reach the top component, hence everyone.
inline MovResult mov_tc_nonwinner(const Tournament& t, const Weighting& w, int x) {
  detail::require_nonwinner(t, SolutionId::top_cycle(), x);
  const SccCondensation scc = scc_condensation(t);
  const int r = scc.component_of[x];
  optim::Digraph g(r + 1);
  std::vector<Edge> realized;
  for (int j = 1; j <= r; ++j) {
    for (int i = 0; i < j; ++i) {
      std::optional<Edge> cheapest;
      for (int u : scc.components[i])
        for (int v = 0; v < t.size(); ++v) {
          if (scc.component_of[v] < j) continue;
          const Edge e{u, v};
          if (!cheapest || w(e) < w(*cheapest) || (w(e) == w(*cheapest) && e < *cheapest)) cheapest = e;
        }
      g.add_arc(j, i, w(*cheapest));
      realized.push_back(*cheapest);
    }
  }
  const auto path = optim::shortest_path(g, r, 0);
  std::vector<Edge> edges;
  for (int id : path->arcs) edges.push_back(realized[id]);
  ReversalSet res = ReversalSet::of(t, w, std::move(edges));
  if (!is_winner(apply_reversals(t, res), SolutionId::top_cycle(), x))
    throw std::logic_error("condensation path for " + t.label(x) + " is not a constructive reversal set");
  return {-res.cost, std::move(res), method::kCondensationPath};
}

/// Margin of victory of a k-king non-winner (k >= 3), unit weights: always -1,
/// by reversing the edge from the lowest-index member of UC(T - x) to x.
inline MovResult mov_kkings_nonwinner_unweighted(const Tournament& t, int x, int k) {
  if (k == 2) throw InvalidArgument("k = 2 is the uncovered set; use mov_uc_nonwinner_unweighted");
  const SolutionId s = SolutionId::kings(k).normalized(t.size());
  detail::require_nonwinner(t, s, x);
  const Restriction rest = remove_alternative(t, x);
  const int y = rest.to_original[uncovered_set(rest.tournament).members.front()];
  ReversalSet r = ReversalSet::of(t, Weighting::unit(t), {{y, x}});
  if (!is_winner(apply_reversals(t, r), s, x))
    throw std::logic_error("single reversal does not make " + t.label(x) + " a winner");
  return {-1.0, std::move(r), method::kSingleReversal};
}

/// One round of the logarithmic Banks construction.
struct BanksLogStep {
  int reversed_from = -1;  // y, whose edge (y,x) is reversed
  int frontier_before = 0;  // |B| before the step
  int frontier_after = 0;   // |B| after the step
};

/// Constructive reversal set for Banks of size at most ceil(log2 n), with the
/// frontier sizes of each round. B starts as the dominators of x; each round
/// reverses (y,x) for the Copeland winner y of T|B (lowest index) and keeps
/// the members of B that beat y.
inline ReversalSet banks_log_crs_trace(const Tournament& t, int x, std::vector<BanksLogStep>* trace) {
  detail::require_alternative(t, x);
  std::vector<Edge> edges;
  if (!banks_member(t, x)) {
    std::vector<int> frontier = dominators(t, x);
    while (!frontier.empty()) {
      const Restriction sub = restrict(t, frontier);
      const int y = sub.to_original[copeland_set(sub.tournament).members.front()];
      edges.push_back({y, x});
      std::vector<int> next;
      for (int b : frontier)
        if (t.beats(b, y)) next.push_back(b);
      if (trace) trace->push_back({y, static_cast<int>(frontier.size()), static_cast<int>(next.size())});
      frontier = std::move(next);
    }
  }
  return ReversalSet::of(t, Weighting::unit(t), std::move(edges));
}

inline ReversalSet banks_log_crs(const Tournament& t, int x) { return banks_log_crs_trace(t, x, nullptr); }

/// Exact margin of victory of a non-winner by best-first search. The trivial
/// set (every edge into x) seeds the upper bound, or the logarithmic Banks set
/// when cheaper; unweighted UC and Banks searches stop at ceil(log2 n).
inline MovResult exact_mov_nonwinner(const Tournament& t, const Weighting& w, int x, const SolutionId& s,
                                     const SearchOptions& opts = {}) {
  const SolutionId sol = s.normalized(t.size());
  detail::require_nonwinner(t, sol, x);
  std::vector<Edge> in;
  for (int y : dominators(t, x)) in.push_back({y, x});
  ReversalSet upper = ReversalSet::of(t, w, std::move(in));
  SearchOptions o = opts;
  if (sol.kind == SolutionId::Kind::Banks) {
    ReversalSet log_set = ReversalSet::of(t, w, banks_log_crs(t, x).edges);
    if (log_set.cost < upper.cost) upper = std::move(log_set);
  }
  if (w.is_unit() && (sol.kind == SolutionId::Kind::Banks || sol.kind == SolutionId::Kind::UncoveredSet)) {
    const int cap = ceil_log2(t.size());
    o.max_cardinality = o.max_cardinality < 0 ? cap : std::min(o.max_cardinality, cap);
  }
  auto found = best_first_reversal(
      t, w, [&](const Tournament& tr) { return is_winner(tr, sol, x); }, o, upper);
  return {-found->cost, *found, method::kBestFirst};
}

}  // namespace movtk
