#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "movtk/error.hpp"

namespace movtk {

/// Directed edge (from, to) of a tournament: `from` dominates `to`.
struct Edge {
  int from = 0;
  int to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

inline Edge reversed(Edge e) { return {e.to, e.from}; }

/// Complete asymmetric digraph on alternatives 0..n-1.
///
/// Immutable after construction; every constructor validates totality and
/// antisymmetry. Labels are presentation-only.
class Tournament {
 public:
  Tournament() = default;

  /// Builds from a row-major orientation matrix where cell (i, j) is nonzero
  /// iff i dominates j.
  Tournament(int n, std::vector<char> orient, std::vector<std::string> labels = {})
      : n_(n), orient_(std::move(orient)), labels_(std::move(labels)) {
    if (n_ < 1) throw InvalidArgument("tournament needs at least one alternative");
    if (orient_.size() != static_cast<std::size_t>(n_) * n_)
      throw InvalidArgument("orientation matrix has wrong size");
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n_))
      throw InvalidArgument("label count does not match n");
    for (auto& c : orient_) c = c ? 1 : 0;
    for (int i = 0; i < n_; ++i) {
      if (at(i, i)) throw InvalidArgument("alternative " + std::to_string(i) + " dominates itself");
      for (int j = i + 1; j < n_; ++j) {
        if (at(i, j) == at(j, i))
          throw InvalidArgument("pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") must be oriented exactly one way");
      }
    }
    outdeg_.assign(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) outdeg_[i] += at(i, j);
  }

  /// Tournament with i -> j for every i < j (alternative 0 on top).
  static Tournament transitive(int n, std::vector<std::string> labels = {}) {
    std::vector<char> m(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) m[static_cast<std::size_t>(i) * n + j] = 1;
    return Tournament(n, std::move(m), std::move(labels));
  }

  /// Builds from a list of edges; every unordered pair must appear exactly once.
  static Tournament from_edges(int n, const std::vector<Edge>& edges,
                               std::vector<std::string> labels = {}) {
    if (n < 1) throw InvalidArgument("tournament needs at least one alternative");
    std::vector<char> m(static_cast<std::size_t>(n) * n, 0);
    for (const Edge& e : edges) {
      if (e.from < 0 || e.to < 0 || e.from >= n || e.to >= n)
        throw InvalidArgument("edge endpoint out of range");
      m[static_cast<std::size_t>(e.from) * n + e.to] = 1;
    }
    if (edges.size() != static_cast<std::size_t>(n) * (n - 1) / 2)
      throw InvalidArgument("edge list must orient every pair exactly once");
    return Tournament(n, std::move(m), std::move(labels));
  }

  int size() const { return n_; }
  bool beats(int i, int j) const { return at(i, j) != 0; }
  int outdegree(int i) const { return outdeg_[i]; }
  int edge_count() const { return n_ * (n_ - 1) / 2; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int i) const { return labels_.empty() ? std::to_string(i) : labels_[i]; }

  /// Index of the alternative with the given label, or -1.
  int find_label(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i)
      if (labels_[i] == name) return i;
    return -1;
  }

  /// All edges, ordered by (from, to).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (beats(i, j)) out.push_back({i, j});
    return out;
  }

  const std::vector<char>& matrix() const { return orient_; }

  friend bool operator==(const Tournament& a, const Tournament& b) {
    return a.n_ == b.n_ && a.orient_ == b.orient_;
  }

 private:
  char at(int i, int j) const { return orient_[static_cast<std::size_t>(i) * n_ + j]; }

  int n_ = 0;
  std::vector<char> orient_;
  std::vector<std::string> labels_;
  std::vector<int> outdeg_;
};

/// Reversal costs, one positive weight per present edge.
///
/// Cells for absent edges hold 0 and are never read. The unweighted setting
/// is `Weighting::unit(T)`.
class Weighting {
 public:
  Weighting() = default;

  Weighting(const Tournament& t, std::vector<double> w) : n_(t.size()), w_(std::move(w)) {
    if (w_.size() != static_cast<std::size_t>(n_) * n_)
      throw InvalidArgument("weight matrix has wrong size");
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        double& v = w_[static_cast<std::size_t>(i) * n_ + j];
        if (!t.beats(i, j)) {
          v = 0.0;
          continue;
        }
        if (!std::isfinite(v) || v <= 0.0)
          throw InvalidArgument("weight of edge (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") must be positive");
      }
    }
  }

  static Weighting unit(const Tournament& t) {
    std::vector<double> w(static_cast<std::size_t>(t.size()) * t.size(), 0.0);
    for (int i = 0; i < t.size(); ++i)
      for (int j = 0; j < t.size(); ++j)
        if (t.beats(i, j)) w[static_cast<std::size_t>(i) * t.size() + j] = 1.0;
    return Weighting(t, std::move(w));
  }

  int size() const { return n_; }
  double operator()(int i, int j) const { return w_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(Edge e) const { return (*this)(e.from, e.to); }
  const std::vector<double>& matrix() const { return w_; }

  /// True iff every present edge has weight exactly 1.
  bool is_unit() const {
    return std::all_of(w_.begin(), w_.end(), [](double v) { return v == 0.0 || v == 1.0; });
  }

  /// Same weights, scaled by a positive factor.
  Weighting scaled(const Tournament& t, double factor) const {
    if (!(factor > 0.0)) throw InvalidArgument("scale factor must be positive");
    std::vector<double> w = w_;
    for (double& v : w) v *= factor;
    return Weighting(t, std::move(w));
  }

 private:
  int n_ = 0;
  std::vector<double> w_;
};

/// Set of tournament edges together with its total reversal cost.
struct ReversalSet {
  std::vector<Edge> edges;  // sorted, no duplicates
  double cost = 0.0;

  std::size_t size() const { return edges.size(); }
  bool empty() const { return edges.empty(); }
  bool contains(Edge e) const { return std::binary_search(edges.begin(), edges.end(), e); }

  /// Validates that every edge is present in `t` and sums its cost under `w`.
  static ReversalSet of(const Tournament& t, const Weighting& w, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw InvalidReversalSet("reversal set lists an edge twice");
    ReversalSet r;
    for (const Edge& e : edges) {
      if (e.from < 0 || e.to < 0 || e.from >= t.size() || e.to >= t.size() || !t.beats(e.from, e.to))
        throw InvalidReversalSet("edge (" + t.label(e.from) + ", " + t.label(e.to) +
                                 ") is not in the tournament");
    }
    r.edges = std::move(edges);
    for (const Edge& e : r.edges) r.cost += w(e);
    return r;
  }

  friend bool operator==(const ReversalSet& a, const ReversalSet& b) { return a.edges == b.edges; }
};

/// Edges of `r` with their direction flipped, i.e. the set to apply to T^R
/// to get back T.
inline std::vector<Edge> reversed(const std::vector<Edge>& edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.push_back(reversed(e));
  std::sort(out.begin(), out.end());
  return out;
}

/// T^R: orientation flipped exactly on the edges of `edges`.
inline Tournament apply_reversals(const Tournament& t, const std::vector<Edge>& edges) {
  const int n = t.size();
  std::vector<char> m = t.matrix();
  for (const Edge& e : edges) {
    if (e.from < 0 || e.to < 0 || e.from >= n || e.to >= n || !t.beats(e.from, e.to))
      throw InvalidReversalSet("edge (" + std::to_string(e.from) + ", " + std::to_string(e.to) +
                               ") is not in the tournament");
    auto& fwd = m[static_cast<std::size_t>(e.from) * n + e.to];
    auto& back = m[static_cast<std::size_t>(e.to) * n + e.from];
    if (!fwd) throw InvalidReversalSet("reversal set lists an edge twice");
    fwd = 0;
    back = 1;
  }
  return Tournament(n, std::move(m), t.labels());
}

inline Tournament apply_reversals(const Tournament& t, const ReversalSet& r) {
  return apply_reversals(t, r.edges);
}

/// D(x): alternatives dominated by x, ascending.
inline std::vector<int> dominion(const Tournament& t, int x) {
  std::vector<int> out;
  for (int y = 0; y < t.size(); ++y)
    if (t.beats(x, y)) out.push_back(y);
  return out;
}

/// Alternatives dominating x, ascending.
inline std::vector<int> dominators(const Tournament& t, int x) {
  std::vector<int> out;
  for (int y = 0; y < t.size(); ++y)
    if (t.beats(y, x)) out.push_back(y);
  return out;
}

/// Induced subtournament plus the map from its indices to the original ones.
struct Restriction {
  Tournament tournament;
  std::vector<int> to_original;
};

/// T|_U. `subset` is deduplicated and sorted before restriction.
inline Restriction restrict(const Tournament& t, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.empty()) throw InvalidArgument("cannot restrict to an empty set");
  for (int v : subset)
    if (v < 0 || v >= t.size()) throw InvalidArgument("restriction index out of range");
  const int m = static_cast<int>(subset.size());
  std::vector<char> mat(static_cast<std::size_t>(m) * m, 0);
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) {
    if (!t.labels().empty()) labels.push_back(t.labels()[subset[i]]);
    for (int j = 0; j < m; ++j) mat[static_cast<std::size_t>(i) * m + j] = t.beats(subset[i], subset[j]);
  }
  return {Tournament(m, std::move(mat), std::move(labels)), std::move(subset)};
}

/// T_{-x}.
inline Restriction remove_alternative(const Tournament& t, int x) {
  std::vector<int> rest;
  for (int v = 0; v < t.size(); ++v)
    if (v != x) rest.push_back(v);
  return restrict(t, std::move(rest));
}

}  // namespace movtk
