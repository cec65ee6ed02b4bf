#include "topocut/rainbow.hpp"

#include <algorithm>
#include <map>

#include "topocut/error.hpp"
#include "topocut/ham_sandwich.hpp"
#include "topocut/lp.hpp"
#include "topocut/predicates.hpp"

namespace topocut {

namespace {

// One recursion step: cut, peel off the on-cut tuple when n is odd, recurse
// into both open sides. Sub-instances of a general-position set stay in
// general position, so the re-check is skipped below the root.
std::unique_ptr<CutTreeNode> split_recursive(const ColoredPointSet& ps,
                                             std::vector<std::vector<Point>>& tuples,
                                             int depth) {
  const size_t n = ps.classes.empty() ? 0 : ps.classes[0].size();
  if (n == 0) return nullptr;
  if (depth > 128) fail(Errc::RecursionFailed, "recursion depth exceeded");
  if (n == 1) {
    // One point of each color: a tuple, nothing to separate.
    std::vector<Point> tuple;
    for (const auto& cls : ps.classes) tuple.push_back(cls.front());
    tuples.push_back(std::move(tuple));
    return nullptr;
  }

  FindCutOptions opts;
  opts.assume_general_position = true;
  BisectionCertificate cert = find_cut(ps, opts);

  auto node = std::make_unique<CutTreeNode>();
  node->cut = cert.cut;

  ColoredPointSet left(ps.dimension, {}), right(ps.dimension, {});
  left.classes.resize(ps.classes.size());
  right.classes.resize(ps.classes.size());
  std::vector<Point> on_tuple;
  for (size_t c = 0; c < ps.classes.size(); ++c) {
    for (const auto& p : ps.classes[c]) {
      switch (cert.cut.side_of(p)) {
        case Side::PositiveOpen: left.classes[c].push_back(p); break;
        case Side::NegativeOpen: right.classes[c].push_back(p); break;
        case Side::On: on_tuple.push_back(p); break;
      }
    }
  }
  if (n % 2 == 1) {
    if (on_tuple.size() != ps.classes.size())
      fail(Errc::RecursionFailed, "odd sub-instance without a full on-cut tuple");
    node->on_cut_tuple = on_tuple;
    tuples.push_back(std::move(on_tuple));
  } else if (!on_tuple.empty()) {
    fail(Errc::RecursionFailed, "even sub-instance with points on the cut");
  }

  node->left = split_recursive(left, tuples, depth + 1);
  node->right = split_recursive(right, tuples, depth + 1);
  return node;
}

}  // namespace

bool hulls_disjoint(const std::vector<Point>& t1, const std::vector<Point>& t2) {
  if (t1.empty() || t2.empty()) return true;
  const int d = t1[0].dim();
  for (const auto& p : t1)
    if (p.dim() != d) fail(Errc::DimensionMismatch, "mixed point dimensions");
  for (const auto& p : t2)
    if (p.dim() != d) fail(Errc::DimensionMismatch, "mixed point dimensions");
  return !convex_hulls_intersect(t1, t2);
}

RainbowPartition rainbow_partition(const ColoredPointSet& ps) {
  ps.validate();
  if (ps.dimension != 2 && ps.dimension != 3)
    fail(Errc::ParameterRange, "rainbow partition supports d in {2,3}");
  if (ps.num_classes() != ps.dimension)
    fail(Errc::ClassCountMismatch, "number of classes must equal the dimension");
  const size_t n = ps.classes[0].size();
  for (const auto& cls : ps.classes)
    if (cls.size() != n) fail(Errc::UnequalClassSizes, "all classes need the same size");
  if (n > 16) fail(Errc::ParameterRange, "class size is limited to 16");
  if (!is_general_position(ps))
    fail(Errc::NotGeneralPosition, "input is not in general position; perturb first");

  RainbowPartition rp;
  rp.cut_tree = split_recursive(ps, rp.tuples, 0);
  if (!verify_rainbow(ps, rp))
    fail(Errc::RecursionFailed, "internal verification of the partition failed");
  return rp;
}

bool verify_rainbow(const ColoredPointSet& ps, const RainbowPartition& rp) {
  ps.validate();
  for (const auto& tuple : rp.tuples)
    for (const auto& p : tuple)
      if (p.dim() != ps.dimension)
        fail(Errc::DimensionMismatch, "tuple point dimension differs from instance");

  // Exactly one point of each color per tuple, and the tuples must use
  // every input point exactly once.
  std::map<Point, int> color_of;
  for (size_t c = 0; c < ps.classes.size(); ++c)
    for (const auto& p : ps.classes[c]) color_of[p] = static_cast<int>(c);

  std::vector<Point> used;
  for (const auto& tuple : rp.tuples) {
    if (tuple.size() != ps.classes.size()) return false;
    std::vector<bool> seen(ps.classes.size(), false);
    for (const auto& p : tuple) {
      const auto it = color_of.find(p);
      if (it == color_of.end()) return false;
      if (seen[static_cast<size_t>(it->second)]) return false;
      seen[static_cast<size_t>(it->second)] = true;
      used.push_back(p);
    }
  }
  std::vector<Point> input = ps.all_points();
  std::sort(input.begin(), input.end());
  std::sort(used.begin(), used.end());
  if (input != used) return false;

  for (size_t i = 0; i < rp.tuples.size(); ++i)
    for (size_t j = i + 1; j < rp.tuples.size(); ++j)
      if (!hulls_disjoint(rp.tuples[i], rp.tuples[j])) return false;
  return true;
}

}  // namespace topocut
