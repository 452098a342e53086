#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <span>
#include <vector>

#include "movtk/error.hpp"

namespace movtk::optim {

/// Network with node balances for b-flow problems.
///
/// A node with positive balance absorbs that much flow, a node with negative
/// balance emits it. Capacities are integers, so optimal flows are integral.
struct FlowNetwork {
  static constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max() / 4;

  struct Arc {
    int from;
    int to;
    std::int64_t capacity;
    double cost;
  };

  std::vector<std::int64_t> balance;
  std::vector<Arc> arcs;

  int add_node(std::int64_t b = 0) {
    balance.push_back(b);
    return static_cast<int>(balance.size()) - 1;
  }

  int add_arc(int from, int to, std::int64_t capacity, double cost) {
    arcs.push_back({from, to, capacity, cost});
    return static_cast<int>(arcs.size()) - 1;
  }

  int size() const { return static_cast<int>(balance.size()); }
};

struct BFlow {
  bool feasible = false;
  std::vector<std::int64_t> flow;  // per arc
  double cost = 0.0;
};

namespace detail {

inline void validate(const FlowNetwork& net) {
  const int n = net.size();
  if (std::accumulate(net.balance.begin(), net.balance.end(), std::int64_t{0}) != 0)
    throw InvalidArgument("node balances must sum to zero");
  for (const auto& a : net.arcs) {
    if (a.from < 0 || a.to < 0 || a.from >= n || a.to >= n) throw InvalidArgument("arc endpoint out of range");
    if (a.capacity < 0) throw InvalidArgument("arc capacities must be nonnegative");
    if (a.cost < 0.0) throw InvalidArgument("arc costs must be nonnegative");
  }
}

}  // namespace detail

/// Minimum-cost b-flow by successive shortest paths with Dijkstra potentials.
///
/// Supplies and demands are wired to a super source and sink; each phase
/// augments along a cheapest residual path. All costs are nonnegative, so
/// zero potentials are valid to start with. `feasible` is false when the
/// balances cannot be met; malformed networks throw InvalidArgument.
inline BFlow min_cost_bflow(const FlowNetwork& net) {
  detail::validate(net);
  const int n = net.size();
  const int src = n, snk = n + 1, total = n + 2;

  struct ResArc {
    int to;
    std::int64_t cap;
    double cost;
    int rev;
    int original;  // arc id for forward arcs, -1 otherwise
  };
  std::vector<std::vector<ResArc>> g(total);
  auto add = [&](int u, int v, std::int64_t cap, double cost, int original) {
    g[u].push_back({v, cap, cost, static_cast<int>(g[v].size()), original});
    g[v].push_back({u, 0, -cost, static_cast<int>(g[u].size()) - 1, -1});
  };
  for (int id = 0; id < static_cast<int>(net.arcs.size()); ++id) {
    const auto& a = net.arcs[id];
    add(a.from, a.to, a.capacity, a.cost, id);
  }
  std::int64_t need = 0;
  for (int v = 0; v < n; ++v) {
    if (net.balance[v] < 0) {
      add(src, v, -net.balance[v], 0.0, -1);
      need -= net.balance[v];
    } else if (net.balance[v] > 0) {
      add(v, snk, net.balance[v], 0.0, -1);
    }
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  constexpr double kEps = 1e-9;
  std::vector<double> pot(total, 0.0), dist(total);
  std::vector<int> prev_node(total), prev_edge(total);
  std::int64_t sent = 0;
  while (sent < need) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[src] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0.0, src});
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d > dist[u] + kEps) continue;
      for (int i = 0; i < static_cast<int>(g[u].size()); ++i) {
        const ResArc& r = g[u][i];
        if (r.cap <= 0) continue;
        const double reduced = std::max(0.0, r.cost + pot[u] - pot[r.to]);
        if (dist[u] + reduced < dist[r.to] - kEps) {
          dist[r.to] = dist[u] + reduced;
          prev_node[r.to] = u;
          prev_edge[r.to] = i;
          pq.push({dist[r.to], r.to});
        }
      }
    }
    if (dist[snk] == kInf) break;
    for (int v = 0; v < total; ++v)
      if (dist[v] < kInf) pot[v] += dist[v];

    std::int64_t push = need - sent;
    for (int v = snk; v != src; v = prev_node[v]) push = std::min(push, g[prev_node[v]][prev_edge[v]].cap);
    for (int v = snk; v != src; v = prev_node[v]) {
      ResArc& r = g[prev_node[v]][prev_edge[v]];
      r.cap -= push;
      g[v][r.rev].cap += push;
    }
    sent += push;
  }

  BFlow out;
  out.feasible = sent == need;
  if (!out.feasible) return out;
  out.flow.assign(net.arcs.size(), 0);
  for (int u = 0; u < n; ++u) {
    for (const ResArc& r : g[u]) {
      if (r.original < 0) continue;
      const std::int64_t f = net.arcs[r.original].capacity - r.cap;
      out.flow[r.original] = f;
      out.cost += static_cast<double>(f) * net.arcs[r.original].cost;
    }
  }
  return out;
}

/// True iff `flow` satisfies capacities and balances.
inline bool is_feasible_bflow(const FlowNetwork& net, std::span<const std::int64_t> flow) {
  if (flow.size() != net.arcs.size()) return false;
  std::vector<std::int64_t> net_in(net.size(), 0);
  for (std::size_t i = 0; i < flow.size(); ++i) {
    const auto& a = net.arcs[i];
    if (flow[i] < 0 || flow[i] > a.capacity) return false;
    net_in[a.to] += flow[i];
    net_in[a.from] -= flow[i];
  }
  return net_in == net.balance;
}

/// Optimality certificate: Bellman-Ford over the residual network of `flow`.
/// A feasible flow is minimum-cost iff this returns false.
inline bool has_negative_residual_cycle(const FlowNetwork& net, std::span<const std::int64_t> flow) {
  struct E {
    int u, v;
    double c;
  };
  std::vector<E> res;
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const auto& a = net.arcs[i];
    if (flow[i] < a.capacity) res.push_back({a.from, a.to, a.cost});
    if (flow[i] > 0) res.push_back({a.to, a.from, -a.cost});
  }
  const int n = net.size();
  std::vector<double> dist(n, 0.0);  // virtual source to every node
  constexpr double kEps = 1e-9;
  for (int round = 0; round < n; ++round) {
    bool changed = false;
    for (const E& e : res) {
      if (dist[e.u] + e.c < dist[e.v] - kEps) {
        dist[e.v] = dist[e.u] + e.c;
        changed = true;
      }
    }
    if (!changed) return false;
  }
  return true;
}

}  // namespace movtk::optim
