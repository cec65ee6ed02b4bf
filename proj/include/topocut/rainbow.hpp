#pragma once

#include <memory>
#include <vector>

#include "topocut/colored_point_set.hpp"
#include "topocut/hyperplane.hpp"

namespace topocut {

// Binary recursion tree of the cuts taken while building a partition. A
// node may carry the rainbow tuple that lay on its cut (odd sub-instance
// sizes); leaves are empty sub-instances.
struct CutTreeNode {
  Hyperplane cut;
  std::vector<Point> on_cut_tuple;  // empty when the sub-instance was even
  std::unique_ptr<CutTreeNode> left;   // positive open side
  std::unique_ptr<CutTreeNode> right;  // negative open side
};

struct RainbowPartition {
  // Each tuple holds exactly one point of each color, ordered by class.
  std::vector<std::vector<Point>> tuples;
  std::unique_ptr<CutTreeNode> cut_tree;  // null for n <= 0
};

// Partitions d equal-size color classes in general position into rainbow
// d-tuples with pairwise disjoint convex hulls by recursive ham-sandwich
// cutting. Requires d in {2,3}, class sizes equal and <= 16. The result is
// re-verified internally before returning.
// Errors: NOT_GENERAL_POSITION, UNEQUAL_CLASS_SIZES, PARAMETER_RANGE,
// RECURSION_FAILED (hard bug signal).
RainbowPartition rainbow_partition(const ColoredPointSet& ps);

// True iff the tuples partition the input exactly, each tuple has one point
// per color, and all pairs of tuple hulls are disjoint under the exact test.
bool verify_rainbow(const ColoredPointSet& ps, const RainbowPartition& rp);

// Exact disjointness of conv(t1) and conv(t2), via a tiny rational linear
// feasibility problem. Total on point sets of a common dimension.
bool hulls_disjoint(const std::vector<Point>& t1, const std::vector<Point>& t2);

}  // namespace topocut
