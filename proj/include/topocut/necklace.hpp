#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace topocut {

// Open necklace: stones[k] is the type (1..d) of the k-th stone.
struct Necklace {
  int d = 0;
  std::vector<int> stones;

  // Throws Error(ParameterRange) unless every type 1..d occurs at least
  // once and no other values appear.
  void validate() const;

  std::vector<int64_t> type_counts() const;
};

// cuts are gap positions in {1..n-1} (cut after stone `position`), strictly
// increasing. assignment labels the |cuts|+1 intervals left to right with
// thieves 1/2, strictly alternating.
struct NecklaceSplit {
  std::vector<int> cuts;
  std::vector<int> assignment;
};

// Embeds stone k at the moment-curve point of parameter k, ham-sandwich
// cuts the d type classes, and reads the necklace cuts off the sign changes
// of the cut polynomial along the curve. Requires every type count even,
// d <= 4, n <= 40. Errors: ODD_TYPE_COUNT, PARAMETER_RANGE; solver errors
// propagate (hard bug signals).
NecklaceSplit split_via_moment_curve(const Necklace& nk);

// Exhaustive oracle over all cut sets of size <= max_cuts and both
// alternating assignments; returns the smallest fair split (fewest cuts,
// then lexicographic cuts, then first-interval thief) or nullopt.
// Requires n <= 30 and max_cuts <= d.
std::optional<NecklaceSplit> split_brute_force(const Necklace& nk, int max_cuts);

// True iff cuts are within range, |cuts| <= d, the assignment alternates
// strictly, and both thieves receive exactly half of every type.
// Throws Error(MalformedSplit) on unsorted or out-of-range cuts.
bool verify_split(const Necklace& nk, const NecklaceSplit& sp);

// Smallest c with a fair c-cut split; always <= d for even type counts.
// Throws Error(OddTypeCount) when some count is odd (no c is ever fair).
int min_cuts(const Necklace& nk);

}  // namespace topocut
