#pragma once

// Reference implementations written straight from the definitions, sharing no
// code with the library beyond the Tournament type. Slow on purpose.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "movtk/solutions.hpp"
#include "movtk/tournament.hpp"

namespace naive {

using movtk::Edge;
using movtk::SolutionId;
using movtk::Tournament;
using movtk::Weighting;

inline std::vector<int> copeland(const Tournament& t) {
  const int n = t.size();
  std::vector<int> score(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) score[i] += t.beats(i, j);
  const int best = *std::max_element(score.begin(), score.end());
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (score[i] == best) out.push_back(i);
  return out;
}

// reach[i][j]: j reachable from i within `steps` arcs (matrix "powers").
inline std::vector<std::vector<char>> reach_within(const Tournament& t, int steps) {
  const int n = t.size();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) r[i][i] = 1;
  for (int s = 0; s < steps; ++s) {
    auto next = r;
    for (int i = 0; i < n; ++i)
      for (int m = 0; m < n; ++m)
        if (r[i][m])
          for (int j = 0; j < n; ++j)
            if (t.beats(m, j)) next[i][j] = 1;
    r = std::move(next);
  }
  return r;
}

inline std::vector<int> kings(const Tournament& t, int k) {
  const auto r = naive::reach_within(t, k);
  std::vector<int> out;
  for (int i = 0; i < t.size(); ++i)
    if (std::all_of(r[i].begin(), r[i].end(), [](char c) { return c != 0; })) out.push_back(i);
  return out;
}

// Alternatives that reach everyone.
inline std::vector<int> top_cycle(const Tournament& t) { return naive::kings(t, std::max(1, t.size() - 1)); }

// No other alternative covers x.
inline std::vector<int> uncovered(const Tournament& t) {
  const int n = t.size();
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    bool covered = false;
    for (int y = 0; y < n && !covered; ++y) {
      if (y == x || !t.beats(y, x)) continue;
      bool contains = true;
      for (int z = 0; z < n; ++z)
        if (t.beats(x, z) && !t.beats(y, z)) contains = false;
      covered = contains;
    }
    if (!covered) out.push_back(x);
  }
  return out;
}

// Maximal elements of inclusion-maximal transitive subtournaments, by
// enumerating every vertex subset.
inline std::vector<int> banks(const Tournament& t) {
  const int n = t.size();
  std::vector<char> in(n, 0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) members.push_back(i);
    bool transitive = true;
    for (int a : members)
      for (int b : members)
        for (int c : members)
          if (t.beats(a, b) && t.beats(b, c) && t.beats(c, a)) transitive = false;
    if (!transitive) continue;
    bool maximal = true;
    for (int z = 0; z < n && maximal; ++z) {
      if ((mask >> z) & 1) continue;
      bool over_all = true;
      for (int m : members) over_all = over_all && t.beats(z, m);
      if (over_all) maximal = false;
    }
    if (!maximal) continue;
    for (int m : members) {
      bool top = true;
      for (int o : members)
        if (o != m && !t.beats(m, o)) top = false;
      if (top) in[m] = 1;
    }
  }
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

inline std::vector<int> choice(const Tournament& t, const SolutionId& s) {
  switch (s.kind) {
    case SolutionId::Kind::Copeland: return naive::copeland(t);
    case SolutionId::Kind::TopCycle: return naive::top_cycle(t);
    case SolutionId::Kind::UncoveredSet: return naive::uncovered(t);
    case SolutionId::Kind::KKings: return naive::kings(t, std::min(s.k, std::max(1, t.size() - 1)));
    case SolutionId::Kind::Banks: return naive::banks(t);
  }
  return {};
}

inline bool member(const Tournament& t, const SolutionId& s, int x) {
  const auto c = naive::choice(t, s);
  return std::find(c.begin(), c.end(), x) != c.end();
}

inline Tournament flip(const Tournament& t, const std::vector<Edge>& set) {
  const int n = t.size();
  std::vector<char> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i) * n + j] = t.beats(i, j);
  for (const Edge& e : set) {
    m[static_cast<std::size_t>(e.from) * n + e.to] = 0;
    m[static_cast<std::size_t>(e.to) * n + e.from] = 1;
  }
  return Tournament(n, std::move(m));
}

struct Mov {
  double value = 0.0;
  std::vector<std::vector<Edge>> witnesses;  // every minimum-cost set, sorted
};

// Margin of victory by trying every subset of edges.
inline Mov mov(const Tournament& t, const Weighting& w, int x, const SolutionId& s) {
  std::vector<Edge> edges;
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j)
      if (t.beats(i, j)) edges.push_back({i, j});
  const int m = static_cast<int>(edges.size());
  const bool winner = naive::member(t, s, x);
  double best = std::numeric_limits<double>::infinity();
  Mov out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Edge> set;
    double cost = 0.0;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1) {
        set.push_back(edges[i]);
        cost += w(edges[i]);
      }
    if (cost > best + 1e-9) continue;
    if (naive::member(naive::flip(t, set), s, x) == winner) continue;
    if (cost < best - 1e-9) {
      best = cost;
      out.witnesses.clear();
    }
    out.witnesses.push_back(set);
  }
  std::sort(out.witnesses.begin(), out.witnesses.end());
  out.value = winner ? best : -best;
  return out;
}

inline Mov mov(const Tournament& t, int x, const SolutionId& s) { return naive::mov(t, Weighting::unit(t), x, s); }

}  // namespace naive
