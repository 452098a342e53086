#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "movtk/generators.hpp"
#include "movtk/io.hpp"
#include "movtk/mov.hpp"
#include "movtk/oracle.hpp"

namespace movtk {

struct CheckFailure {
  std::string algorithm;
  std::string solution;
  int alternative = -1;
  double expected = 0.0;
  double got = 0.0;
  std::string reason;
  std::string tournament;  // serialized instance
};

struct VerifyReport {
  std::uint64_t tournaments = 0;
  std::uint64_t checks = 0;
  std::vector<CheckFailure> failures;

  bool ok() const { return failures.empty(); }

  std::string summary() const {
    if (ok()) return "OK (" + std::to_string(tournaments) + " tournaments)";
    return "FAIL (" + std::to_string(failures.size()) + " mismatches in " + std::to_string(tournaments) +
           " tournaments)";
  }
};

namespace detail {

struct Candidate {
  std::string name;
  std::function<MovResult()> run;
};

inline std::vector<Candidate> candidates(const Tournament& t, const Weighting& w, int x, const SolutionId& sol,
                                         bool winner, const SearchOptions& opts) {
  using Kind = SolutionId::Kind;
  const int n = t.size();
  const bool unit = w.is_unit();
  std::vector<Candidate> out;
  if (winner) {
    switch (sol.kind) {
      case Kind::Copeland: out.push_back({"copeland-greedy", [&, x] { return mov_copeland_winner(t, w, x); }}); break;
      case Kind::TopCycle:
        out.push_back({"bounded-cut", [&, x, n] { return mov_kkings_winner(t, w, x, std::max(2, n - 1)); }});
        break;
      case Kind::UncoveredSet: out.push_back({"bounded-cut", [&, x] { return mov_kkings_winner(t, w, x, 2); }}); break;
      case Kind::KKings: out.push_back({"bounded-cut", [&, x] { return mov_kkings_winner(t, w, x, sol.k); }}); break;
      case Kind::Banks: break;
    }
    out.push_back({"exact", [&, x] { return exact_mov_winner(t, w, x, sol, opts); }});
    return out;
  }
  switch (sol.kind) {
    case Kind::Copeland: out.push_back({"min-cost-bflow", [&, x] { return mov_copeland_nonwinner(t, w, x); }}); break;
    case Kind::TopCycle:
      out.push_back({"condensation-shortest-path", [&, x] { return mov_tc_nonwinner(t, w, x); }});
      if (unit && n - 1 >= 3)
        out.push_back({"single-reversal", [&, x, n] { return mov_kkings_nonwinner_unweighted(t, x, n - 1); }});
      break;
    case Kind::UncoveredSet:
      if (unit)
        out.push_back({"dominating-augmentation", [&, x] { return mov_uc_nonwinner_unweighted(t, x); }});
      break;
    case Kind::KKings:
      if (unit)
        out.push_back({"single-reversal", [&, x] { return mov_kkings_nonwinner_unweighted(t, x, sol.k); }});
      break;
    case Kind::Banks: break;
  }
  out.push_back({"exact", [&, x] { return exact_mov_nonwinner(t, w, x, sol, opts); }});
  return out;
}

}  // namespace detail

/// Cross-checks every applicable algorithm for x against the oracle: same
/// value, a witness that flips membership, and a witness listed among the
/// oracle's minimum reversal sets. For unit-weight Banks non-winners the
/// logarithmic construction is checked for size and validity as well.
inline void verify_alternative(const Tournament& t, const Weighting& w, int x, const SolutionId& s,
                               VerifyReport& report, const SearchOptions& opts = {}) {
  constexpr double kEps = 1e-6;
  const SolutionId sol = s.normalized(t.size());
  const OracleReport oracle = brute_force_mov(t, w, x, sol, opts.budget);
  auto fail = [&](const std::string& alg, double got, const std::string& reason) {
    report.failures.push_back({alg, sol.name(), x, oracle.mov, got, reason, io::serialize(t)});
  };

  for (const auto& c : detail::candidates(t, w, x, sol, oracle.winner, opts)) {
    ++report.checks;
    MovResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      fail(c.name, 0.0, std::string("threw: ") + e.what());
      continue;
    }
    if (std::abs(r.value - oracle.mov) > kEps) {
      fail(c.name, r.value, "value differs from oracle");
      continue;
    }
    if (std::abs(std::abs(r.value) - r.witness.cost) > kEps) {
      fail(c.name, r.value, "witness cost differs from value");
      continue;
    }
    if (is_winner(apply_reversals(t, r.witness), sol, x) == oracle.winner) {
      fail(c.name, r.value, "witness does not flip membership");
      continue;
    }
    if (std::find(oracle.all_min_witnesses.begin(), oracle.all_min_witnesses.end(), r.witness) ==
        oracle.all_min_witnesses.end())
      fail(c.name, r.value, "witness not among the oracle's minimum reversal sets");
  }

  if (sol.kind == SolutionId::Kind::Banks && !oracle.winner && w.is_unit()) {
    ++report.checks;
    const ReversalSet log_set = banks_log_crs(t, x);
    if (static_cast<int>(log_set.size()) > ceil_log2(t.size()))
      fail("banks-log-crs", -static_cast<double>(log_set.size()), "larger than ceil(log2 n)");
    else if (!banks_member(apply_reversals(t, log_set), x))
      fail("banks-log-crs", -static_cast<double>(log_set.size()), "not a constructive reversal set");
  }
}

inline void verify_tournament(const Tournament& t, const Weighting& w, const std::vector<SolutionId>& solutions,
                              VerifyReport& report, const SearchOptions& opts = {}) {
  ++report.tournaments;
  for (const SolutionId& s : solutions)
    for (int x = 0; x < t.size(); ++x) verify_alternative(t, w, x, s, report, opts);
}

/// Every labelled tournament on n alternatives, unit weights.
inline VerifyReport verify_exhaustive(int n, const std::vector<SolutionId>& solutions,
                                      const SearchOptions& opts = {}) {
  VerifyReport report;
  const std::uint64_t total = tournament_count(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    const Tournament t = tournament_from_code(n, code);
    verify_tournament(t, Weighting::unit(t), solutions, report, opts);
  }
  return report;
}

/// Integer weight range for random verification.
struct WeightRange {
  int lo = 1;
  int hi = 9;
};

/// Seed of the i-th instance of a random sweep, and of its weights.
inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t i) { return seed + i; }
inline std::uint64_t weight_seed(std::uint64_t seed, std::uint64_t i) {
  return (seed + i) ^ 0x9E3779B97F4A7C15ULL;
}

/// `count` seeded random tournaments on n alternatives.
inline VerifyReport verify_random(int n, int count, std::uint64_t seed, const std::vector<SolutionId>& solutions,
                                  std::optional<WeightRange> weights = std::nullopt, const SearchOptions& opts = {}) {
  VerifyReport report;
  for (int i = 0; i < count; ++i) {
    const Tournament t = generate_uniform(n, instance_seed(seed, i));
    const Weighting w = weights ? generate_uniform_weights(t, weights->lo, weights->hi, weight_seed(seed, i))
                                : Weighting::unit(t);
    verify_tournament(t, w, solutions, report, opts);
  }
  return report;
}

}  // namespace movtk
