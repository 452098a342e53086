#pragma once

#include <string>
#include <vector>

#include "movtk/error.hpp"
#include "movtk/tournament.hpp"

namespace movtk::optim {

struct Arc {
  int from = 0;
  int to = 0;
  double weight = 0.0;
};

/// Simple weighted digraph: no self-loops, at most one arc per ordered pair.
class Digraph {
 public:
  explicit Digraph(int n = 0) : n_(n), out_(n), index_(static_cast<std::size_t>(n) * n, -1) {}

  static Digraph from_tournament(const Tournament& t, const Weighting& w) {
    Digraph g(t.size());
    for (const Edge& e : t.edges()) g.add_arc(e.from, e.to, w(e));
    return g;
  }

  int add_arc(int from, int to, double weight) {
    if (from < 0 || to < 0 || from >= n_ || to >= n_) throw InvalidArgument("arc endpoint out of range");
    if (from == to) throw InvalidArgument("self-loops are not allowed");
    if (weight < 0.0) throw InvalidArgument("arc weights must be nonnegative");
    auto& slot = index_[static_cast<std::size_t>(from) * n_ + to];
    if (slot >= 0) throw InvalidArgument("parallel arc " + std::to_string(from) + "->" + std::to_string(to));
    slot = static_cast<int>(arcs_.size());
    arcs_.push_back({from, to, weight});
    out_[from].push_back(slot);
    return slot;
  }

  int size() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int id) const { return arcs_[id]; }
  const std::vector<int>& out_arcs(int v) const { return out_[v]; }

  /// Arc id for (from, to), or -1.
  int find(int from, int to) const { return index_[static_cast<std::size_t>(from) * n_ + to]; }

 private:
  int n_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<int> index_;
};

}  // namespace movtk::optim
