#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "movtk/error.hpp"
#include "movtk/search.hpp"
#include "movtk/solutions.hpp"
#include "movtk/tournament.hpp"

namespace movtk {

/// Brute-force margin of victory with every minimum-cost reversal set.
struct OracleReport {
  double mov = 0.0;
  bool winner = false;
  std::vector<ReversalSet> all_min_witnesses;  // sorted by edge list
  std::size_t count = 0;
};

/// Direct evaluation of the margin of victory by enumerating reversal sets.
///
/// With unit weights, sets are enumerated by cardinality and then
/// lexicographically, stopping after the first cardinality that contains a
/// reversal set. Otherwise every subset is enumerated. Throws BudgetExceeded
/// once more than `budget` subsets would have to be examined.
inline OracleReport brute_force_mov(const Tournament& t, const Weighting& w, int x, const SolutionId& s,
                                    std::uint64_t budget = std::uint64_t{1} << 24) {
  if (x < 0 || x >= t.size()) throw InvalidArgument("alternative out of range");
  if (t.size() < 2) throw InvalidArgument("margin of victory needs at least two alternatives");
  const SolutionId sol = s.normalized(t.size());
  const std::vector<Edge> edges = t.edges();
  const int m = static_cast<int>(edges.size());

  OracleReport rep;
  rep.winner = is_winner(t, sol, x);
  auto flips = [&](const std::vector<Edge>& set) { return is_winner(apply_reversals(t, set), sol, x) != rep.winner; };

  std::uint64_t examined = 0;
  auto tick = [&] {
    if (++examined > budget)
      throw BudgetExceeded("oracle exceeded its budget of " + std::to_string(budget) + " subsets");
  };

  if (w.is_unit()) {
    for (int size = 1; size <= m && rep.all_min_witnesses.empty(); ++size) {
      std::vector<int> pick(size);
      for (int i = 0; i < size; ++i) pick[i] = i;
      while (true) {
        tick();
        std::vector<Edge> set;
        for (int i : pick) set.push_back(edges[i]);
        if (flips(set)) rep.all_min_witnesses.push_back(ReversalSet::of(t, w, std::move(set)));
        int i = size - 1;
        while (i >= 0 && pick[i] == m - size + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  } else {
    if (m >= 63 || (std::uint64_t{1} << m) > budget)
      throw BudgetExceeded("oracle would examine 2^" + std::to_string(m) + " subsets, budget is " +
                           std::to_string(budget));
    constexpr double kEps = 1e-9;
    double best = 0.0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      tick();
      double cost = 0.0;
      std::vector<Edge> set;
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1) {
          set.push_back(edges[i]);
          cost += w(edges[i]);
        }
      if (!rep.all_min_witnesses.empty() && cost > best + kEps) continue;
      if (!flips(set)) continue;
      if (rep.all_min_witnesses.empty() || cost < best - kEps) {
        rep.all_min_witnesses.clear();
        best = cost;
      }
      rep.all_min_witnesses.push_back(ReversalSet::of(t, w, std::move(set)));
    }
    std::sort(rep.all_min_witnesses.begin(), rep.all_min_witnesses.end(),
              [](const ReversalSet& a, const ReversalSet& b) { return a.edges < b.edges; });
  }

  if (rep.all_min_witnesses.empty()) throw std::logic_error("no reversal set flips membership");
  const double cost = rep.all_min_witnesses.front().cost;
  rep.mov = rep.winner ? cost : -cost;
  rep.count = rep.all_min_witnesses.size();
  return rep;
}

/// Number of distinct minimum-cost reversal sets for x.
inline std::size_t count_min_reversal_sets(const Tournament& t, const Weighting& w, int x, const SolutionId& s,
                                           std::uint64_t budget = std::uint64_t{1} << 24) {
  return brute_force_mov(t, w, x, s, budget).count;
}

/// Worst-case unweighted margin of victory for the given side: floor(n/2)
/// for winners; -1 (TC, k-kings with k >= 3), -(n-2) (CO) or -ceil(log2 n)
/// (UC, BA) for non-winners. Throws when the bound is zero.
inline double mov_bound(int n, const SolutionId& s, bool winner) {
  const SolutionId sol = s.normalized(n);
  double bound = 0.0;
  if (winner) {
    bound = n / 2;
  } else {
    switch (sol.kind) {
      case SolutionId::Kind::TopCycle:
      case SolutionId::Kind::KKings: bound = -1.0; break;
      case SolutionId::Kind::Copeland: bound = -(n - 2); break;
      case SolutionId::Kind::UncoveredSet:
      case SolutionId::Kind::Banks: bound = -ceil_log2(n); break;
    }
  }
  if (bound == 0.0)
    throw InvalidArgument("no margin-of-victory bound for " + sol.name() + (winner ? " winners" : " non-winners") +
                          " at n = " + std::to_string(n));
  return bound;
}

/// Unweighted margin of victory divided by its worst-case bound.
inline double relative_mov(const Tournament& t, int x, const SolutionId& s, double mov) {
  if (x < 0 || x >= t.size()) throw InvalidArgument("alternative out of range");
  if (mov == 0.0 || !std::isfinite(mov)) throw InvalidArgument("margin of victory must be finite and nonzero");
  return mov / mov_bound(t.size(), s, mov > 0);
}

}  // namespace movtk
