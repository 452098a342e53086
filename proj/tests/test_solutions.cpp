#include <gtest/gtest.h>

#include <algorithm>

#include "movtk/generators.hpp"
#include "movtk/solutions.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

using namespace movtk;
using namespace fixtures;

namespace {

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST(Solutions, Fig1) {
  const Tournament t = fig1();
  EXPECT_EQ(copeland_set(t).members, (std::vector<int>{f}));
  EXPECT_EQ(top_cycle(t).members, (std::vector<int>{b, c, d, e, f}));
  EXPECT_EQ(uncovered_set(t).members, (std::vector<int>{c, d, e, f}));
  EXPECT_EQ(k_kings(t, 5).members, (std::vector<int>{b, c, d, e, f}));
  EXPECT_EQ(k_kings(t, 3).members, (std::vector<int>{b, c, d, e, f}));
  EXPECT_EQ(banks_set(t).members, (std::vector<int>{c, d, e, f}));
  EXPECT_TRUE(covers(t, f, b));
  EXPECT_FALSE(covers(t, b, f));
  EXPECT_THROW(covers(t, a, a), InvalidArgument);
}

TEST(Solutions, ThreeCycle) {
  const Tournament t = three_cycle();
  const std::vector<int> all{0, 1, 2};
  EXPECT_EQ(copeland_set(t).members, all);
  EXPECT_EQ(top_cycle(t).members, all);
  EXPECT_EQ(uncovered_set(t).members, all);
  EXPECT_EQ(banks_set(t).members, all);
  EXPECT_EQ(scc_condensation(t).components.size(), 1u);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x != y) {
        EXPECT_FALSE(covers(t, x, y));
      }
}

TEST(Solutions, TransitiveChain) {
  const Tournament t = Tournament::transitive(6);
  for (const SolutionId& s : {SolutionId::copeland(), SolutionId::top_cycle(), SolutionId::uncovered_set(),
                              SolutionId::kings(3), SolutionId::banks()})
    EXPECT_EQ(choice_set(t, s).members, std::vector<int>{0}) << s.name();
  const SccCondensation scc = scc_condensation(t);
  ASSERT_EQ(scc.components.size(), 6u);
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(scc.components[i], std::vector<int>{i});
    EXPECT_EQ(scc.component_of[i], i);
  }
  for (int y = 1; y < 6; ++y) EXPECT_TRUE(covers(t, 0, y));
}

TEST(Solutions, KKingsValidation) {
  const Tournament t = fig1();
  EXPECT_THROW(k_kings(t, 1), InvalidArgument);
  EXPECT_THROW(SolutionId::kings(1), InvalidArgument);
  EXPECT_EQ(SolutionId::kings(2).normalized(6).kind, SolutionId::Kind::UncoveredSet);
  EXPECT_EQ(SolutionId::kings(5).normalized(6).kind, SolutionId::Kind::TopCycle);
  EXPECT_EQ(SolutionId::kings(9).normalized(6).kind, SolutionId::Kind::TopCycle);
  EXPECT_EQ(SolutionId::kings(3).normalized(6).kind, SolutionId::Kind::KKings);
  EXPECT_EQ(k_kings(t, 40).members, top_cycle(t).members);
}

TEST(Solutions, SingleAlternative) {
  const Tournament t = Tournament::transitive(1);
  for (const SolutionId& s : {SolutionId::copeland(), SolutionId::top_cycle(), SolutionId::uncovered_set(),
                              SolutionId::banks()})
    EXPECT_EQ(choice_set(t, s).members, std::vector<int>{0});
}

TEST(Solutions, CondensationInvariants) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Tournament t = generate_uniform(2 + seed % 9, seed);
    const SccCondensation scc = scc_condensation(t);
    std::vector<int> seen(t.size(), 0);
    for (std::size_t i = 0; i < scc.components.size(); ++i)
      for (int u : scc.components[i]) {
        ++seen[u];
        EXPECT_EQ(scc.component_of[u], static_cast<int>(i));
        for (std::size_t j = i + 1; j < scc.components.size(); ++j)
          for (int v : scc.components[j]) EXPECT_TRUE(t.beats(u, v));
        for (int v : scc.components[i]) {
          const auto dist = distances_from(t, u);
          EXPECT_GE(dist[v], 0);
        }
      }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}

TEST(Solutions, AgreeWithDefinitionsExhaustively) {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t code = 0; code < tournament_count(n); ++code) {
      const Tournament t = tournament_from_code(n, code);
      ASSERT_EQ(copeland_set(t).members, naive::copeland(t));
      ASSERT_EQ(top_cycle(t).members, naive::top_cycle(t));
      ASSERT_EQ(uncovered_set(t).members, naive::uncovered(t));
      ASSERT_EQ(banks_set(t).members, naive::banks(t)) << io::serialize(t);
      if (n >= 4) {
        ASSERT_EQ(k_kings(t, 3).members, naive::kings(t, 3));
      }
    }
  }
}

TEST(Solutions, AgreeWithDefinitionsOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 6 + seed % 5;
    const Tournament t = generate_uniform(n, seed);
    ASSERT_EQ(uncovered_set(t).members, naive::uncovered(t));
    ASSERT_EQ(banks_set(t).members, naive::banks(t)) << io::serialize(t);
    for (int k = 3; k < n; ++k) ASSERT_EQ(k_kings(t, k).members, naive::kings(t, k));
  }
}

TEST(Solutions, Containments) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 3 + seed % 10;
    const Tournament t = generate_uniform(n, seed);
    const auto uc = uncovered_set(t).members;
    const auto tc = top_cycle(t).members;
    EXPECT_TRUE(subset(copeland_set(t).members, uc));
    EXPECT_TRUE(subset(banks_set(t).members, uc));
    auto prev = uc;
    for (int k = 3; k <= n - 1; ++k) {
      const auto kk = k_kings(t, k).members;
      EXPECT_TRUE(subset(prev, kk));
      prev = kk;
    }
    EXPECT_TRUE(subset(prev, tc));
    for (const SolutionId& s : {SolutionId::copeland(), SolutionId::top_cycle(), SolutionId::uncovered_set(),
                                SolutionId::banks()}) {
      const auto members = choice_set(t, s).members;
      EXPECT_FALSE(members.empty());
      for (int x = 0; x < n; ++x)
        EXPECT_EQ(is_winner(t, s, x), std::binary_search(members.begin(), members.end(), x));
    }
  }
}

TEST(Solutions, CondorcetConsistency) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 3 + seed % 8;
    Tournament t = generate_uniform(n, seed);
    const int w = static_cast<int>(seed % n);
    std::vector<Edge> flips;
    for (int v : dominators(t, w)) flips.push_back({v, w});
    t = apply_reversals(t, flips);
    for (const SolutionId& s : {SolutionId::copeland(), SolutionId::top_cycle(), SolutionId::uncovered_set(),
                                SolutionId::kings(3), SolutionId::banks()})
      EXPECT_EQ(choice_set(t, s.normalized(n)).members, std::vector<int>{w});
  }
}
