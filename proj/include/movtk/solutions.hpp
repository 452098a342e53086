#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <string>
#include <vector>

#include "movtk/error.hpp"
#include "movtk/tournament.hpp"

namespace movtk {

/// Which tournament solution to evaluate.
struct SolutionId {
  enum class Kind { Copeland, TopCycle, UncoveredSet, KKings, Banks };

  Kind kind = Kind::Copeland;
  int k = 0;  // only meaningful for KKings

  static SolutionId copeland() { return {Kind::Copeland, 0}; }
  static SolutionId top_cycle() { return {Kind::TopCycle, 0}; }
  static SolutionId uncovered_set() { return {Kind::UncoveredSet, 0}; }
  static SolutionId banks() { return {Kind::Banks, 0}; }
  static SolutionId kings(int k) {
    if (k < 2) throw InvalidArgument("k-kings requires k >= 2, got " + std::to_string(k));
    return {Kind::KKings, k};
  }

  /// Collapses aliases for a tournament of size n: 2-kings is UC and
  /// k-kings with k >= n-1 is TC (no distance in a tournament exceeds n-1).
  SolutionId normalized(int n) const {
    if (kind != Kind::KKings) return *this;
    if (k >= n - 1) return top_cycle();
    if (k == 2) return uncovered_set();
    return *this;
  }

  /// Path-length bound for the reachability-based solutions (UC, k-kings, TC).
  int reach_bound(int n) const {
    switch (kind) {
      case Kind::UncoveredSet: return std::max(1, std::min(2, n - 1));
      case Kind::TopCycle: return std::max(1, n - 1);
      case Kind::KKings: return std::max(1, std::min(k, n - 1));
      default: return 0;
    }
  }

  std::string name() const {
    switch (kind) {
      case Kind::Copeland: return "co";
      case Kind::TopCycle: return "tc";
      case Kind::UncoveredSet: return "uc";
      case Kind::KKings: return std::to_string(k) + "-kings";
      case Kind::Banks: return "ba";
    }
    return "?";
  }

  friend bool operator==(const SolutionId&, const SolutionId&) = default;
};

/// Nonempty, sorted set of winners.
struct ChoiceSet {
  std::vector<int> members;

  bool contains(int x) const { return std::binary_search(members.begin(), members.end(), x); }
  std::size_t size() const { return members.size(); }
  friend bool operator==(const ChoiceSet&, const ChoiceSet&) = default;
};

/// Strongly connected components in dominance order: every member of
/// components[i] dominates every member of components[j] for i < j.
struct SccCondensation {
  std::vector<std::vector<int>> components;
  std::vector<int> component_of;
};

inline ChoiceSet copeland_set(const Tournament& t) {
  int best = 0;
  for (int v = 0; v < t.size(); ++v) best = std::max(best, t.outdegree(v));
  ChoiceSet out;
  for (int v = 0; v < t.size(); ++v)
    if (t.outdegree(v) == best) out.members.push_back(v);
  return out;
}

/// Condensation from the score sequence. A set that dominates its complement
/// consists of the highest-scoring alternatives, and a prefix A of size m of
/// the score-sorted order dominates the rest iff its scores sum to
/// m(m-1)/2 + m(n-m). Every such prefix is a component boundary.
inline SccCondensation scc_condensation(const Tournament& t) {
  const int n = t.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return t.outdegree(a) > t.outdegree(b); });
  SccCondensation out;
  out.component_of.assign(n, -1);
  std::int64_t sum = 0;
  std::vector<int> current;
  for (int m = 1; m <= n; ++m) {
    const int v = order[m - 1];
    sum += t.outdegree(v);
    current.push_back(v);
    const std::int64_t closed = static_cast<std::int64_t>(m) * (m - 1) / 2 + static_cast<std::int64_t>(m) * (n - m);
    if (sum == closed) {
      std::sort(current.begin(), current.end());
      for (int u : current) out.component_of[u] = static_cast<int>(out.components.size());
      out.components.push_back(std::move(current));
      current.clear();
    }
  }
  return out;
}

inline ChoiceSet top_cycle(const Tournament& t) { return {scc_condensation(t).components.front()}; }

/// BFS distances from `source`; unreachable vertices get -1.
inline std::vector<int> distances_from(const Tournament& t, int source) {
  std::vector<int> dist(t.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v = 0; v < t.size(); ++v) {
      if (dist[v] < 0 && t.beats(u, v)) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

/// True iff x reaches every alternative by a path of length at most `bound`.
inline bool reaches_all_within(const Tournament& t, int x, int bound) {
  const auto dist = distances_from(t, x);
  return std::all_of(dist.begin(), dist.end(), [&](int d) { return d >= 0 && d <= bound; });
}

/// Alternatives whose BFS eccentricity is at most k. k >= n-1 behaves as TC.
inline ChoiceSet k_kings(const Tournament& t, int k) {
  if (k < 2) throw InvalidArgument("k-kings requires k >= 2, got " + std::to_string(k));
  const int bound = std::max(1, std::min(k, t.size() - 1));
  ChoiceSet out;
  for (int x = 0; x < t.size(); ++x)
    if (reaches_all_within(t, x, bound)) out.members.push_back(x);
  return out;
}

inline ChoiceSet uncovered_set(const Tournament& t) { return k_kings(t, 2); }

/// x covers y iff D(y) is a subset of D(x).
inline bool covers(const Tournament& t, int x, int y) {
  if (x == y) throw InvalidArgument("covers() needs two distinct alternatives");
  for (int z = 0; z < t.size(); ++z)
    if (t.beats(y, z) && !t.beats(x, z)) return false;
  return true;
}

namespace detail {

// Depth-first search for a transitive S inside D(x) such that every
// dominator of x is beaten by some member of S. `chain` is S in dominance
// order, `open` the dominators of x not yet beaten by any member.
inline bool banks_search(const Tournament& t, const std::vector<int>& candidates, std::vector<int>& chain,
                         std::vector<int>& open) {
  if (open.empty()) return true;

  auto fits = [&](int s) {
    // s can join the chain iff the members beating s form a prefix.
    std::size_t i = 0;
    while (i < chain.size() && t.beats(chain[i], s)) ++i;
    for (std::size_t j = i; j < chain.size(); ++j) {
      if (chain[j] == s || !t.beats(s, chain[j])) return false;
    }
    return true;
  };

  // Branch on the open dominator with the fewest compatible killers.
  int pivot = -1;
  std::vector<int> pivot_killers;
  for (int b : open) {
    std::vector<int> killers;
    for (int s : candidates)
      if (t.beats(s, b) && fits(s)) killers.push_back(s);
    if (killers.empty()) return false;
    if (pivot < 0 || killers.size() < pivot_killers.size()) {
      pivot = b;
      pivot_killers = std::move(killers);
    }
  }

  auto kills = [&](int s) {
    int c = 0;
    for (int b : open) c += t.beats(s, b);
    return c;
  };
  std::stable_sort(pivot_killers.begin(), pivot_killers.end(),
                   [&](int a, int b) { return kills(a) > kills(b); });

  for (int s : pivot_killers) {
    std::size_t pos = 0;
    while (pos < chain.size() && t.beats(chain[pos], s)) ++pos;
    chain.insert(chain.begin() + static_cast<std::ptrdiff_t>(pos), s);
    std::vector<int> saved = open;
    std::erase_if(open, [&](int b) { return t.beats(s, b); });
    if (banks_search(t, candidates, chain, open)) return true;
    open = std::move(saved);
    chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  return false;
}

}  // namespace detail

/// Banks membership: x tops some inclusion-maximal transitive subtournament.
///
/// Equivalent search: find a transitive S inside D(x) such that no
/// alternative dominates all of S + {x}. Only dominators of x can, so each
/// must be beaten by a member of S. Exponential in the worst case (membership
/// is NP-complete).
inline bool banks_member(const Tournament& t, int x) {
  std::vector<int> candidates = dominion(t, x);
  std::vector<int> open = dominators(t, x);
  std::vector<int> chain;
  return detail::banks_search(t, candidates, chain, open);
}

inline ChoiceSet banks_set(const Tournament& t) {
  ChoiceSet out;
  for (int x = 0; x < t.size(); ++x)
    if (banks_member(t, x)) out.members.push_back(x);
  return out;
}

inline ChoiceSet choice_set(const Tournament& t, const SolutionId& s) {
  switch (s.kind) {
    case SolutionId::Kind::Copeland: return copeland_set(t);
    case SolutionId::Kind::TopCycle: return top_cycle(t);
    case SolutionId::Kind::UncoveredSet: return uncovered_set(t);
    case SolutionId::Kind::KKings: return k_kings(t, s.k);
    case SolutionId::Kind::Banks: return banks_set(t);
  }
  return {};
}

/// Membership of a single alternative, without computing the whole set.
inline bool is_winner(const Tournament& t, const SolutionId& s, int x) {
  switch (s.kind) {
    case SolutionId::Kind::Copeland: {
      for (int v = 0; v < t.size(); ++v)
        if (t.outdegree(v) > t.outdegree(x)) return false;
      return true;
    }
    case SolutionId::Kind::Banks: return banks_member(t, x);
    default: return reaches_all_within(t, x, s.reach_bound(t.size()));
  }
}

}  // namespace movtk
