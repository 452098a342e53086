#pragma once

#include <algorithm>

#include "movtk/mov_constructive.hpp"
#include "movtk/mov_destructive.hpp"
#include "movtk/mov_result.hpp"
#include "movtk/search.hpp"
#include "movtk/solutions.hpp"
#include "movtk/tournament.hpp"

namespace movtk {

struct MovOptions {
  SearchOptions search;
  optim::CutLimits cut;
};

/// Margin of victory of x under S, routed to the most specific algorithm:
///
///   winners:      CO greedy; UC, k-kings, TC bounded cut; BA exact search
///   non-winners:  CO b-flow; TC condensation path; UC dominating
///                 augmentation (unit weights); k-kings single reversal
///                 (unit weights); everything else exact search
inline MovResult mov(const Tournament& t, const Weighting& w, int x, const SolutionId& s, const MovOptions& opts = {}) {
  using Kind = SolutionId::Kind;
  const SolutionId sol = s.normalized(t.size());
  detail::require_alternative(t, x);
  if (is_winner(t, sol, x)) {
    switch (sol.kind) {
      case Kind::Copeland: return mov_copeland_winner(t, w, x);
      case Kind::TopCycle: return mov_kkings_winner(t, w, x, std::max(2, t.size() - 1), opts.cut);
      case Kind::UncoveredSet: return mov_kkings_winner(t, w, x, 2, opts.cut);
      case Kind::KKings: return mov_kkings_winner(t, w, x, sol.k, opts.cut);
      case Kind::Banks: return mov_banks_winner(t, w, x, opts.search);
    }
  }
  switch (sol.kind) {
    case Kind::Copeland: return mov_copeland_nonwinner(t, w, x);
    case Kind::TopCycle: return mov_tc_nonwinner(t, w, x);
    case Kind::UncoveredSet:
      if (w.is_unit()) return mov_uc_nonwinner_unweighted(t, x);
      break;
    case Kind::KKings:
      if (w.is_unit()) return mov_kkings_nonwinner_unweighted(t, x, sol.k);
      break;
    case Kind::Banks: break;
  }
  return exact_mov_nonwinner(t, w, x, sol, opts.search);
}

inline MovResult mov(const Tournament& t, int x, const SolutionId& s, const MovOptions& opts = {}) {
  return mov(t, Weighting::unit(t), x, s, opts);
}

}  // namespace movtk
