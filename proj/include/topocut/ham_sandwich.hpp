#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "topocut/colored_point_set.hpp"
#include "topocut/hyperplane.hpp"

namespace topocut {

// Per-class side census against a cut, in the order
// (positive_open, on, negative_open).
using SideCounts = std::array<int64_t, 3>;

struct BisectionCertificate {
  Hyperplane cut;
  std::vector<SideCounts> per_class_counts;
};

struct FindCutOptions {
  // Callers that can guarantee general position (subsets of a checked set,
  // moment-curve embeddings) may skip the O(n^(d+1)) re-check.
  bool assume_general_position = false;
  // Testing hook: skip the one-anchor-per-class phase so the general
  // anchored fallback is exercised. Identical certificates are not
  // guaranteed, only validity.
  bool skip_per_class_phase = false;
};

// Finds a hyperplane that floor-bisects every class: exactly
// floor(|A_i|/2) points of class i in each open half-space and at most one
// on the cut (exactly one iff |A_i| is odd). Requires #classes == d,
// d in {1,2,3,4}, and general position.
//
// For all-odd class sizes the cut passes through one point of each class
// and the lexicographically smallest canonical such hyperplane is returned.
// When some class is even, no valid cut can touch any of its points, so the
// cut is built from the smallest valid anchored candidate (a spanning point
// set plus release directions) with a concrete dyadic offset; valid cuts
// then form open families and the spanned lex-minimum does not exist.
//
// Errors: CLASS_COUNT_MISMATCH, PARAMETER_RANGE, NOT_GENERAL_POSITION, and
// SEARCH_EXHAUSTED (a hard bug signal: the theorem guarantees existence).
BisectionCertificate find_cut(const ColoredPointSet& ps, const FindCutOptions& opts = {});

// Recomputes every side classification exactly and checks both that the
// certificate counts match and that they satisfy the floor-bisection
// contract.
bool verify_cut(const ColoredPointSet& ps, const BisectionCertificate& cert);

// Exhaustive oracle: every canonical hyperplane spanned by d affinely
// independent points of the union that satisfies the contract, sorted.
// A superset containing find_cut's answer whenever all class sizes are odd
// (with an even class no spanned hyperplane can satisfy the contract, and
// the result is empty). Requires total points <= 40.
std::vector<BisectionCertificate> enumerate_all_cuts(const ColoredPointSet& ps);

// The point of each class lying on the cut, when there is one.
std::vector<std::optional<Point>> contact_points(const ColoredPointSet& ps,
                                                 const Hyperplane& cut);

}  // namespace topocut
