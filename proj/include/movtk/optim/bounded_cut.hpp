#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "movtk/error.hpp"
#include "movtk/optim/digraph.hpp"
#include "movtk/optim/max_flow.hpp"

namespace movtk::optim {

/// Which route produced a bounded cut.
enum class CutMethod { DirectArc, TwoHopClosedForm, MaxFlow, BranchAndBound };

inline const char* to_string(CutMethod m) {
  switch (m) {
    case CutMethod::DirectArc: return "direct-arc";
    case CutMethod::TwoHopClosedForm: return "two-hop-closed-form";
    case CutMethod::MaxFlow: return "max-flow";
    case CutMethod::BranchAndBound: return "branch-and-bound";
  }
  return "?";
}

struct BoundedCut {
  double weight = 0.0;
  std::vector<int> arcs;  // arc ids, ascending
  int sink = -1;
  CutMethod method = CutMethod::DirectArc;
};

/// Search effort cap for the branch-and-bound route.
struct CutLimits {
  std::uint64_t max_paths = std::uint64_t{1} << 22;
  std::uint64_t max_nodes = std::uint64_t{1} << 26;
};

/// True iff every s-t path with at most `bound` arcs uses an arc in `removed`.
inline bool is_bounded_cut(const Digraph& g, int s, int t, int bound, const std::vector<int>& removed) {
  std::vector<char> gone(g.arcs().size(), 0);
  for (int id : removed) gone[id] = 1;
  std::vector<int> dist(g.size(), -1);
  std::deque<int> q{s};
  dist[s] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (dist[u] == bound) continue;
    for (int id : g.out_arcs(u)) {
      if (gone[id]) continue;
      int v = g.arc(id).to;
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
    }
  }
  return dist[t] < 0;
}

namespace detail {

inline double total_weight(const Digraph& g, const std::vector<int>& arcs) {
  double w = 0.0;
  for (int id : arcs) w += g.arc(id).weight;
  return w;
}

// Drops arcs that are not needed, heaviest first, until the set is
// inclusion-minimal.
inline std::vector<int> make_minimal(const Digraph& g, int s, int t, int bound, std::vector<int> cut) {
  std::vector<int> order = cut;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.arc(a).weight > g.arc(b).weight; });
  for (int id : order) {
    std::vector<int> trial;
    for (int c : cut)
      if (c != id) trial.push_back(c);
    if (is_bounded_cut(g, s, t, bound, trial)) cut = std::move(trial);
  }
  std::sort(cut.begin(), cut.end());
  return cut;
}

// All simple s-t paths with at most `bound` arcs, as arc-id lists.
inline std::vector<std::vector<int>> enumerate_paths(const Digraph& g, int s, int t, int bound,
                                                     std::uint64_t max_paths) {
  std::vector<std::vector<int>> paths;
  std::vector<int> stack;
  std::vector<char> on_path(g.size(), 0);
  // Remaining-distance pruning: BFS distance to t in the reverse graph.
  std::vector<int> to_t(g.size(), -1);
  {
    std::vector<std::vector<int>> in(g.size());
    for (const Arc& a : g.arcs()) in[a.to].push_back(a.from);
    std::deque<int> q{t};
    to_t[t] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : in[u])
        if (to_t[v] < 0) {
          to_t[v] = to_t[u] + 1;
          q.push_back(v);
        }
    }
  }
  auto dfs = [&](auto&& self, int u) -> void {
    if (u == t) {
      paths.push_back(stack);
      if (paths.size() > max_paths) throw BudgetExceeded("bounded cut: too many short paths");
      return;
    }
    for (int id : g.out_arcs(u)) {
      int v = g.arc(id).to;
      if (on_path[v] || to_t[v] < 0) continue;
      if (static_cast<int>(stack.size()) + 1 + to_t[v] > bound) continue;
      on_path[v] = 1;
      stack.push_back(id);
      self(self, v);
      stack.pop_back();
      on_path[v] = 0;
    }
  };
  on_path[s] = 1;
  dfs(dfs, s);
  return paths;
}

// Minimum-weight hitting set of `paths` by branch and bound. The lower bound
// is a greedy packing of pairwise arc-disjoint unhit paths, each charged its
// cheapest still-allowed arc.
class HittingSetSolver {
 public:
  HittingSetSolver(const Digraph& g, std::vector<std::vector<int>> paths, std::uint64_t max_nodes)
      : g_(g), paths_(std::move(paths)), max_nodes_(max_nodes) {
    const std::size_t m = g.arcs().size();
    chosen_.assign(m, 0);
    forbidden_.assign(m, 0);
    hit_count_.assign(paths_.size(), 0);
    arc_paths_.assign(m, {});
    for (int p = 0; p < static_cast<int>(paths_.size()); ++p)
      for (int id : paths_[p]) arc_paths_[id].push_back(p);
  }

  /// `upper` is a known feasible hitting set.
  std::vector<int> solve(std::vector<int> upper) {
    best_ = std::move(upper);
    best_weight_ = total_weight(g_, best_);
    recurse(0.0);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void recurse(double cost) {
    if (++nodes_ > max_nodes_) throw BudgetExceeded("bounded cut: branch-and-bound node limit reached");

    // Lower bound and branching path in one pass.
    std::vector<char> used(g_.arcs().size(), 0);
    double bound = cost;
    int branch = -1;
    int branch_free = std::numeric_limits<int>::max();
    for (int p = 0; p < static_cast<int>(paths_.size()); ++p) {
      if (hit_count_[p] > 0) continue;
      int free_arcs = 0;
      double cheapest = std::numeric_limits<double>::infinity();
      bool disjoint = true;
      for (int id : paths_[p]) {
        if (forbidden_[id]) continue;
        ++free_arcs;
        cheapest = std::min(cheapest, g_.arc(id).weight);
        if (used[id]) disjoint = false;
      }
      if (free_arcs == 0) return;
      if (free_arcs < branch_free) {
        branch = p;
        branch_free = free_arcs;
      }
      if (disjoint) {
        bound += cheapest;
        for (int id : paths_[p])
          if (!forbidden_[id]) used[id] = 1;
      }
    }
    if (branch < 0) {
      if (cost < best_weight_ - kEps) {
        best_weight_ = cost;
        best_.clear();
        for (int id = 0; id < static_cast<int>(chosen_.size()); ++id)
          if (chosen_[id]) best_.push_back(id);
      }
      return;
    }
    if (bound >= best_weight_ - kEps) return;

    std::vector<int> options;
    for (int id : paths_[branch])
      if (!forbidden_[id]) options.push_back(id);
    std::stable_sort(options.begin(), options.end(), [&](int a, int b) {
      if (g_.arc(a).weight != g_.arc(b).weight) return g_.arc(a).weight < g_.arc(b).weight;
      return arc_paths_[a].size() > arc_paths_[b].size();
    });

    std::vector<int> newly_forbidden;
    for (int id : options) {
      choose(id, true);
      recurse(cost + g_.arc(id).weight);
      choose(id, false);
      forbidden_[id] = 1;
      newly_forbidden.push_back(id);
    }
    for (int id : newly_forbidden) forbidden_[id] = 0;
  }

  void choose(int id, bool on) {
    chosen_[id] = on;
    for (int p : arc_paths_[id]) hit_count_[p] += on ? 1 : -1;
  }

  static constexpr double kEps = 1e-9;
  const Digraph& g_;
  std::vector<std::vector<int>> paths_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<char> chosen_, forbidden_;
  std::vector<int> hit_count_;
  std::vector<std::vector<int>> arc_paths_;
  std::vector<int> best_;
  double best_weight_ = 0.0;
};

}  // namespace detail

/// Minimum-weight set of arcs meeting every s-t path with at most `bound`
/// arcs. Arc weights must be positive.
///
/// bound 1 takes the direct arc; bound 2 is solved in closed form (the direct
/// arc plus the cheaper arc of every two-hop path); bound >= n-1 is an
/// ordinary minimum cut; anything in between goes to an exact branch and
/// bound over the enumerated short paths. The result is inclusion-minimal.
inline BoundedCut bounded_cut(const Digraph& g, int s, int t, int bound, const CutLimits& limits = {}) {
  if (bound < 1) throw InvalidArgument("length bound must be at least 1, got " + std::to_string(bound));
  if (s == t) throw InvalidArgument("bounded_cut needs s != t");
  if (s < 0 || t < 0 || s >= g.size() || t >= g.size()) throw InvalidArgument("bounded_cut endpoint out of range");
  for (const Arc& a : g.arcs())
    if (!(a.weight > 0.0)) throw InvalidArgument("bounded_cut needs positive arc weights");

  BoundedCut out;
  out.sink = t;
  const int direct = g.find(s, t);
  if (bound == 1) {
    out.method = CutMethod::DirectArc;
    if (direct >= 0) out.arcs.push_back(direct);
  } else if (bound == 2) {
    out.method = CutMethod::TwoHopClosedForm;
    if (direct >= 0) out.arcs.push_back(direct);
    for (int first : g.out_arcs(s)) {
      const int mid = g.arc(first).to;
      if (mid == t) continue;
      const int second = g.find(mid, t);
      if (second < 0) continue;
      out.arcs.push_back(g.arc(second).weight < g.arc(first).weight ? second : first);
    }
    std::sort(out.arcs.begin(), out.arcs.end());
  } else if (bound >= g.size() - 1) {
    out.method = CutMethod::MaxFlow;
    out.arcs = max_flow_min_cut(g, s, t).arcs;
  } else {
    out.method = CutMethod::BranchAndBound;
    auto paths = detail::enumerate_paths(g, s, t, bound, limits.max_paths);
    if (!paths.empty()) {
      auto upper = max_flow_min_cut(g, s, t).arcs;
      detail::HittingSetSolver solver(g, std::move(paths), limits.max_nodes);
      out.arcs = solver.solve(std::move(upper));
    }
  }
  out.arcs = detail::make_minimal(g, s, t, bound, std::move(out.arcs));
  out.weight = detail::total_weight(g, out.arcs);
  return out;
}

/// Minimum bounded cut separating s from some other vertex: the cheapest
/// bounded_cut over all sinks, ties going to the lowest sink index.
inline BoundedCut bounded_x_cut(const Digraph& g, int s, int bound, const CutLimits& limits = {}) {
  if (g.size() < 2) throw InvalidArgument("bounded_x_cut needs at least two vertices");
  BoundedCut best;
  bool have = false;
  for (int t = 0; t < g.size(); ++t) {
    if (t == s) continue;
    BoundedCut c = bounded_cut(g, s, t, bound, limits);
    if (!have || c.weight < best.weight - 1e-9) {
      best = std::move(c);
      have = true;
    }
  }
  return best;
}

}  // namespace movtk::optim
