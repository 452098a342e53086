#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <vector>

#include "movtk/error.hpp"
#include "movtk/optim/digraph.hpp"

namespace movtk::optim {

struct MinCut {
  double value = 0.0;
  std::vector<int> arcs;  // arc ids of the graph, ascending
};

/// Dinic's algorithm with arc weights as capacities. The returned cut is the
/// set of arcs leaving the residual-reachable side of s.
inline MinCut max_flow_min_cut(const Digraph& g, int s, int t) {
  if (s == t) throw InvalidArgument("max_flow_min_cut needs s != t");
  const int n = g.size();
  constexpr double kEps = 1e-12;

  struct ResArc {
    int to;
    double cap;
    int rev;
  };
  std::vector<std::vector<ResArc>> res(n);
  for (const Arc& a : g.arcs()) {
    res[a.from].push_back({a.to, a.weight, static_cast<int>(res[a.to].size())});
    res[a.to].push_back({a.from, 0.0, static_cast<int>(res[a.from].size()) - 1});
  }

  std::vector<int> level(n), it(n);
  auto bfs = [&] {
    std::fill(level.begin(), level.end(), -1);
    std::deque<int> q{s};
    level[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (const ResArc& r : res[u]) {
        if (r.cap > kEps && level[r.to] < 0) {
          level[r.to] = level[u] + 1;
          q.push_back(r.to);
        }
      }
    }
    return level[t] >= 0;
  };
  auto dfs = [&](auto&& self, int u, double pushed) -> double {
    if (u == t) return pushed;
    for (int& i = it[u]; i < static_cast<int>(res[u].size()); ++i) {
      ResArc& r = res[u][i];
      if (r.cap <= kEps || level[r.to] != level[u] + 1) continue;
      double got = self(self, r.to, std::min(pushed, r.cap));
      if (got > kEps) {
        r.cap -= got;
        res[r.to][r.rev].cap += got;
        return got;
      }
    }
    return 0.0;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    while (dfs(dfs, s, std::numeric_limits<double>::infinity()) > kEps) {
    }
  }

  // After the last failed BFS, level >= 0 marks the source side.
  MinCut cut;
  for (int id = 0; id < static_cast<int>(g.arcs().size()); ++id) {
    const Arc& a = g.arc(id);
    if (level[a.from] >= 0 && level[a.to] < 0) {
      cut.arcs.push_back(id);
      cut.value += a.weight;
    }
  }
  return cut;
}

}  // namespace movtk::optim
