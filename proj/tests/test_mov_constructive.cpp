#include <gtest/gtest.h>

#include <algorithm>

#include "movtk/generators.hpp"
#include "movtk/mov.hpp"
#include "movtk/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

using namespace movtk;
using namespace fixtures;

namespace {

bool makes_winner(const Tournament& t, const SolutionId& s, int x, const ReversalSet& r) {
  return !is_winner(t, s, x) && is_winner(apply_reversals(t, r), s, x);
}

}  // namespace

TEST(CopelandNonwinner, Fig1) {
  const Tournament t = fig1();
  const Weighting w = Weighting::unit(t);
  const MovResult re = mov_copeland_nonwinner(t, w, e);
  EXPECT_DOUBLE_EQ(re.value, -1.0);
  EXPECT_TRUE(makes_winner(t, SolutionId::copeland(), e, re.witness));
  EXPECT_EQ(re.method, method::kBFlow);
  EXPECT_DOUBLE_EQ(mov_copeland_nonwinner(t, w, a).value, -3.0);
  for (int v : {b, c, d}) EXPECT_DOUBLE_EQ(mov_copeland_nonwinner(t, w, v).value, -1.0);
  EXPECT_THROW(mov_copeland_nonwinner(t, w, f), InvalidArgument);
}

TEST(CopelandNonwinner, FlipFeEnough) {
  const Tournament t = fig1();
  const Tournament tr = apply_reversals(t, std::vector<Edge>{{f, e}});
  EXPECT_EQ(tr.outdegree(e), 4);
  EXPECT_EQ(tr.outdegree(f), 3);
  EXPECT_TRUE(is_winner(tr, SolutionId::copeland(), e));
}

TEST(CopelandNonwinner, TightFamily) {
  for (int n = 3; n <= 9; ++n) {
    const TightInstance ti = generate_tight_co_constructive(n);
    EXPECT_DOUBLE_EQ(mov_copeland_nonwinner(ti.tournament, Weighting::unit(ti.tournament), ti.x).value, -(n - 2))
        << n;
  }
}

TEST(CopelandNonwinner, NetworkFlowsGiveExactOutdegrees) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 4 + seed % 5;
    const Tournament t = generate_uniform(n, seed);
    const Weighting w = generate_uniform_weights(t, 1, 7, seed);
    for (int v = 0; v < n; ++v) {
      if (is_winner(t, SolutionId::copeland(), v)) continue;
      for (int target = n / 2; target <= n - 1; ++target) {
        const CopelandNetwork cn = build_copeland_network(t, w, v, target);
        const optim::BFlow flow = optim::min_cost_bflow(cn.net);
        if (!flow.feasible) continue;
        EXPECT_TRUE(optim::is_feasible_bflow(cn.net, flow.flow));
        EXPECT_FALSE(optim::has_negative_residual_cycle(cn.net, flow.flow));
        const Tournament tr = apply_reversals(t, copeland_reversals(cn, flow.flow));
        EXPECT_EQ(tr.outdegree(v), target);
        for (int u = 0; u < n; ++u) EXPECT_LE(tr.outdegree(u), target);
      }
    }
  }
}

TEST(UcNonwinner, Fig1) {
  const Tournament t = fig1();
  const MovResult ra = mov_uc_nonwinner_unweighted(t, a);
  EXPECT_DOUBLE_EQ(ra.value, -2.0);
  EXPECT_TRUE(makes_winner(t, SolutionId::uncovered_set(), a, ra.witness));
  const MovResult rb = mov_uc_nonwinner_unweighted(t, b);
  EXPECT_DOUBLE_EQ(rb.value, -1.0);
  const auto ref = naive::mov(t, b, SolutionId::uncovered_set()).witnesses;
  EXPECT_NE(std::find(ref.begin(), ref.end(), rb.witness.edges), ref.end());
  EXPECT_NE(std::find(ref.begin(), ref.end(), std::vector<Edge>{{f, b}}), ref.end());
  EXPECT_THROW(mov_uc_nonwinner_unweighted(t, c), InvalidArgument);
}

TEST(UcNonwinner, LoserUnderCondorcetWinner) {
  const Tournament t = Tournament::transitive(3);
  const MovResult r = mov_uc_nonwinner_unweighted(t, 2);
  EXPECT_DOUBLE_EQ(r.value, -1.0);
  EXPECT_EQ(r.witness.edges, (std::vector<Edge>{{0, 2}}));
}

TEST(UcNonwinner, LogBound) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 3 + seed % 10;
    const Tournament t = generate_uniform(n, seed);
    for (int v = 0; v < n; ++v) {
      if (is_winner(t, SolutionId::uncovered_set(), v)) continue;
      const MovResult r = mov_uc_nonwinner_unweighted(t, v);
      EXPECT_GE(r.value, -ceil_log2(n));
      EXPECT_TRUE(makes_winner(t, SolutionId::uncovered_set(), v, r.witness));
    }
  }
}

TEST(TcNonwinner, Examples) {
  const Tournament t = fig1();
  const MovResult r = mov_tc_nonwinner(t, Weighting::unit(t), a);
  EXPECT_DOUBLE_EQ(r.value, -1.0);
  EXPECT_TRUE(makes_winner(t, SolutionId::top_cycle(), a, r.witness));
  EXPECT_THROW(mov_tc_nonwinner(t, Weighting::unit(t), b), InvalidArgument);

  const Tournament chain = Tournament::transitive(4);
  EXPECT_DOUBLE_EQ(mov_tc_nonwinner(chain, Weighting::unit(chain), 3).value, -1.0);
}

TEST(TcNonwinner, CheapPathThroughMiddleComponents) {
  // 0 > 1 > 2 > 3; reversing (1,3) and (0,2) gives 3 -> 1 -> 2 -> 0.
  const Tournament chain = Tournament::transitive(4);
  std::vector<double> raw(16, 0.0);
  for (const Edge& edge : chain.edges()) raw[edge.from * 4 + edge.to] = 10.0;
  raw[1 * 4 + 3] = 1.0;
  raw[0 * 4 + 2] = 1.0;
  const Weighting w(chain, raw);
  const MovResult r = mov_tc_nonwinner(chain, w, 3);
  EXPECT_DOUBLE_EQ(r.value, -2.0);
  EXPECT_EQ(r.witness.edges, (std::vector<Edge>{{0, 2}, {1, 3}}));
  EXPECT_DOUBLE_EQ(naive::mov(chain, w, 3, SolutionId::top_cycle()).value, -2.0);
}

TEST(TcNonwinner, WeightedMatchesNaive) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = 4 + seed % 2;
    const Tournament t = generate_uniform(n, seed + 77);
    const Weighting w = generate_uniform_weights(t, 1, 9, seed + 77);
    for (int v = 0; v < n; ++v) {
      if (is_winner(t, SolutionId::top_cycle(), v)) continue;
      const MovResult r = mov_tc_nonwinner(t, w, v);
      ASSERT_NEAR(r.value, naive::mov(t, w, v, SolutionId::top_cycle()).value, 1e-9) << io::serialize(t);
      EXPECT_TRUE(makes_winner(t, SolutionId::top_cycle(), v, r.witness));
    }
  }
}

TEST(KKingsNonwinner, AlwaysOneReversal) {
  const Tournament t = fig1();
  for (int k : {3, 5}) {
    const MovResult r = mov_kkings_nonwinner_unweighted(t, a, k);
    EXPECT_DOUBLE_EQ(r.value, -1.0);
    EXPECT_TRUE(makes_winner(t, SolutionId::kings(k).normalized(6), a, r.witness));
  }
  const Tournament chain = Tournament::transitive(5);
  EXPECT_DOUBLE_EQ(mov_kkings_nonwinner_unweighted(chain, 4, 3).value, -1.0);
  EXPECT_THROW(mov_kkings_nonwinner_unweighted(t, a, 2), InvalidArgument);
  EXPECT_THROW(mov_kkings_nonwinner_unweighted(t, f, 3), InvalidArgument);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 4 + seed % 8;
    const Tournament g = generate_uniform(n, seed);
    for (int k = 3; k <= n - 1; ++k)
      for (int v = 0; v < n; ++v)
        if (!is_winner(g, SolutionId::kings(k).normalized(n), v)) {
          EXPECT_TRUE(makes_winner(g, SolutionId::kings(k).normalized(n), v,
                                   mov_kkings_nonwinner_unweighted(g, v, k).witness));
        }
  }
}

TEST(BanksLogCrs, Examples) {
  const Tournament t = fig1();
  EXPECT_TRUE(banks_log_crs(t, f).empty());
  const ReversalSet r = banks_log_crs(t, a);
  EXPECT_LE(r.size(), 3u);
  EXPECT_TRUE(banks_member(apply_reversals(t, r), a));
}

TEST(BanksLogCrs, CondorcetLosers) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Tournament t = generate_uniform(8, seed);
    const int loser = static_cast<int>(seed % 8);
    std::vector<Edge> flips;
    for (int v : dominion(t, loser)) flips.push_back({loser, v});
    t = apply_reversals(t, flips);
    const ReversalSet r = banks_log_crs(t, loser);
    EXPECT_LE(r.size(), 3u);
    EXPECT_TRUE(banks_member(apply_reversals(t, r), loser));
  }
}

TEST(BanksLogCrs, FrontierHalvesEachRound) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 4 + seed % 13;
    const Tournament t = generate_uniform(n, seed);
    for (int v = 0; v < n; ++v) {
      std::vector<BanksLogStep> steps;
      const ReversalSet r = banks_log_crs_trace(t, v, &steps);
      for (const BanksLogStep& s : steps) EXPECT_LE(s.frontier_after, (s.frontier_before - 1) / 2);
      EXPECT_LE(static_cast<int>(r.size()), ceil_log2(n));
      EXPECT_TRUE(banks_member(apply_reversals(t, r), v));
    }
  }
}

TEST(ExactNonwinner, Fig1AndCrossChecks) {
  const Tournament t = fig1();
  EXPECT_DOUBLE_EQ(exact_mov_nonwinner(t, Weighting::unit(t), a, SolutionId::uncovered_set()).value, -2.0);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 4 + seed % 3;
    const Tournament g = generate_uniform(n, seed + 900);
    const Weighting w = generate_uniform_weights(g, 1, 9, seed + 900);
    for (int v = 0; v < n; ++v) {
      if (!is_winner(g, SolutionId::top_cycle(), v)) {
        EXPECT_NEAR(exact_mov_nonwinner(g, w, v, SolutionId::top_cycle()).value, mov_tc_nonwinner(g, w, v).value,
                    1e-9);
      }
      if (!is_winner(g, SolutionId::copeland(), v)) {
        EXPECT_NEAR(exact_mov_nonwinner(g, w, v, SolutionId::copeland()).value,
                    mov_copeland_nonwinner(g, w, v).value, 1e-9);
        const Weighting u = Weighting::unit(g);
        EXPECT_DOUBLE_EQ(exact_mov_nonwinner(g, u, v, SolutionId::copeland()).value,
                         mov_copeland_nonwinner(g, u, v).value);
      }
    }
  }
}

TEST(Constructive, AgreesWithNaiveDefinitionWeighted) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 4 + seed % 2;
    const Tournament t = generate_uniform(n, seed + 300);
    const Weighting w = generate_uniform_weights(t, 1, 9, seed + 300);
    for (const SolutionId& s : {SolutionId::copeland(), SolutionId::top_cycle(), SolutionId::uncovered_set(),
                                SolutionId::kings(3), SolutionId::banks()}) {
      const SolutionId sol = s.normalized(n);
      for (int v = 0; v < n; ++v) {
        if (is_winner(t, sol, v)) continue;
        const MovResult r = mov(t, w, v, s);
        ASSERT_NEAR(r.value, naive::mov(t, w, v, sol).value, 1e-9) << sol.name() << " " << v;
        EXPECT_TRUE(makes_winner(t, sol, v, r.witness));
      }
    }
  }
}

TEST(Constructive, UnweightedBounds) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int n = 3 + seed % 6;
    const Tournament t = generate_uniform(n, seed);
    for (int v = 0; v < n; ++v) {
      if (!is_winner(t, SolutionId::top_cycle(), v)) {
        EXPECT_DOUBLE_EQ(mov(t, v, SolutionId::top_cycle()).value, -1.0);
      }
      if (!is_winner(t, SolutionId::copeland(), v)) {
        EXPECT_GE(mov(t, v, SolutionId::copeland()).value, -(n - 2));
      }
      if (!is_winner(t, SolutionId::banks(), v)) {
        EXPECT_GE(mov(t, v, SolutionId::banks()).value, -ceil_log2(n));
      }
    }
  }
}
