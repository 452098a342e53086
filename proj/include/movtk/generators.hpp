#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "movtk/error.hpp"
#include "movtk/tournament.hpp"

namespace movtk {

/// Uniform random tournament.
///
/// Engine: std::mt19937_64 seeded with `seed`. Pairs are visited as i < j in
/// row-major order; each draws one 64-bit value and orients i -> j iff its top
/// bit is set. Both the engine and this procedure are fully specified, so a
/// given (n, seed) yields the same tournament on every platform.
inline Tournament generate_uniform(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<char> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool forward = (rng() >> 63) != 0;
      m[static_cast<std::size_t>(forward ? i : j) * n + (forward ? j : i)] = 1;
    }
  }
  return Tournament(n, std::move(m));
}

/// The tournament numbered `code` among all 2^(n(n-1)/2) labelled
/// tournaments on n alternatives: bit b of `code` orients the b-th pair
/// (i < j, row-major) as i -> j when set.
inline Tournament tournament_from_code(int n, std::uint64_t code) {
  if (n < 1 || n > 11) throw InvalidArgument("tournament_from_code supports 1 <= n <= 11");
  std::vector<char> m(static_cast<std::size_t>(n) * n, 0);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit) {
      const bool forward = ((code >> bit) & 1) != 0;
      m[static_cast<std::size_t>(forward ? i : j) * n + (forward ? j : i)] = 1;
    }
  return Tournament(n, std::move(m));
}

/// Number of labelled tournaments on n alternatives.
inline std::uint64_t tournament_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

/// Integer weights in [lo, hi] on the present edges.
///
/// std::mt19937_64 seeded with `seed`; edges visited in (from, to) order; each
/// weight is lo + (draw mod (hi - lo + 1)).
inline Weighting generate_uniform_weights(const Tournament& t, int lo, int hi, std::uint64_t seed) {
  if (lo < 1 || hi < lo) throw InvalidArgument("weight range must satisfy 1 <= lo <= hi");
  std::mt19937_64 rng(seed);
  const int n = t.size();
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (t.beats(i, j)) w[static_cast<std::size_t>(i) * n + j] = static_cast<double>(lo + rng() % span);
  return Weighting(t, std::move(w));
}

/// Tournament paired with a distinguished alternative.
struct TightInstance {
  Tournament tournament;
  int x = 0;
};

/// Worst case for destructive reversals: x (index 0) dominates y1..y_{2l-1}
/// placed on a circle, where each y_i dominates the l-1 following ones
/// clockwise; n = 2l. For odd n the even instance of size n+1 is built and
/// y_{2l-1} dropped. Taking x out of CO or BA needs floor(n/2) reversals.
inline TightInstance generate_tight_destructive(int n) {
  if (n < 3) throw InvalidArgument("tight destructive family needs n >= 3");
  const int l = (n + 1) / 2;
  const int ring = 2 * l - 1;  // y1..y_ring
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i});
  for (int i = 1; i <= ring; ++i) {
    for (int step = 1; step <= l - 1; ++step) {
      const int j = (i - 1 + step) % ring + 1;
      if (i < n && j < n) edges.push_back({i, j});
    }
  }
  std::vector<std::string> labels{"x"};
  for (int i = 1; i < n; ++i) labels.push_back("y" + std::to_string(i));
  return {Tournament::from_edges(n, edges, std::move(labels)), 0};
}

/// Worst case for Copeland constructive reversals: the transitive tournament
/// with a Condorcet winner y on top and x (index n-1) as Condorcet loser.
inline TightInstance generate_tight_co_constructive(int n) {
  if (n < 3) throw InvalidArgument("tight Copeland constructive family needs n >= 3");
  std::vector<std::string> labels{"y"};
  for (int i = 1; i < n - 1; ++i) labels.push_back("z" + std::to_string(i));
  labels.push_back("x");
  return {Tournament::transitive(n, std::move(labels)), n - 1};
}

}  // namespace movtk
