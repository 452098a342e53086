#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "movtk/error.hpp"
#include "movtk/optim/digraph.hpp"

namespace movtk::optim {

struct Path {
  double distance = 0.0;
  std::vector<int> nodes;  // s ... t
  std::vector<int> arcs;   // arc ids along the path
};

/// Dijkstra on nonnegative arc weights. Among equally short paths, each node
/// keeps the lowest-index predecessor. Returns nullopt if t is unreachable.
inline std::optional<Path> shortest_path(const Digraph& g, int s, int t) {
  const int n = g.size();
  if (s < 0 || t < 0 || s >= n || t >= n) throw InvalidArgument("shortest_path endpoint out of range");
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, kInf);
  std::vector<int> pred_arc(n, -1);
  std::vector<char> done(n, 0);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[s] = 0.0;
  pq.push({0.0, s});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (int id : g.out_arcs(u)) {
      const Arc& a = g.arc(id);
      const double nd = d + a.weight;
      if (done[a.to]) continue;
      if (nd < dist[a.to] || (nd == dist[a.to] && pred_arc[a.to] >= 0 && u < g.arc(pred_arc[a.to]).from)) {
        dist[a.to] = nd;
        pred_arc[a.to] = id;
        pq.push({nd, a.to});
      }
    }
  }
  if (dist[t] == kInf) return std::nullopt;
  Path p;
  p.distance = dist[t];
  for (int v = t; v != s; v = g.arc(pred_arc[v]).from) {
    p.nodes.push_back(v);
    p.arcs.push_back(pred_arc[v]);
  }
  p.nodes.push_back(s);
  std::reverse(p.nodes.begin(), p.nodes.end());
  std::reverse(p.arcs.begin(), p.arcs.end());
  return p;
}

}  // namespace movtk::optim
