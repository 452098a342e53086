#pragma once

#include <string>

#include "movtk/tournament.hpp"

namespace movtk {

/// Margin of victory of one alternative: positive for winners (cost of the
/// cheapest destructive reversal set), negative for non-winners (minus the
/// cost of the cheapest constructive one), with a witness set achieving it.
struct MovResult {
  double value = 0.0;
  ReversalSet witness;
  std::string method;
};

namespace method {
inline constexpr const char* kCopelandGreedy = "copeland-greedy";
inline constexpr const char* kBoundedCut = "bounded-cut";
inline constexpr const char* kBestFirst = "best-first";
inline constexpr const char* kBFlow = "min-cost-bflow";
inline constexpr const char* kDominatingAugmentation = "dominating-augmentation";
inline constexpr const char* kCondensationPath = "condensation-shortest-path";
inline constexpr const char* kSingleReversal = "single-reversal";
}  // namespace method

}  // namespace movtk
