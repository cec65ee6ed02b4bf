#include <doctest.h>

#include <algorithm>
#include <functional>

#include "topocut/error.hpp"
#include "topocut/generators.hpp"
#include "topocut/lp.hpp"
#include "topocut/predicates.hpp"
#include "topocut/rainbow.hpp"
#include "topocut/rng.hpp"

using namespace topocut;

namespace {

Point pt(std::vector<int> coords) {
  Point p;
  for (int c : coords) p.coords.emplace_back(c);
  return p;
}

int tree_depth(const CutTreeNode* node) {
  if (node == nullptr) return 0;
  return 1 + std::max(tree_depth(node->left.get()), tree_depth(node->right.get()));
}

// Sampling oracle: rational grid points of conv(a) tested for membership in
// conv(b). Can only confirm non-disjointness.
bool sampled_overlap(const std::vector<Point>& a, const std::vector<Point>& b) {
  const int steps = 4;
  std::vector<std::vector<Rational>> weight_sets;
  std::function<void(std::vector<int>&, int, int)> gen = [&](std::vector<int>& acc, int pos,
                                                             int left) {
    if (pos == static_cast<int>(a.size()) - 1) {
      acc.push_back(left);
      std::vector<Rational> w;
      for (int v : acc) w.emplace_back(Rational(v, steps));
      weight_sets.push_back(std::move(w));
      acc.pop_back();
      return;
    }
    for (int v = 0; v <= left; ++v) {
      acc.push_back(v);
      gen(acc, pos + 1, left - v);
      acc.pop_back();
    }
  };
  std::vector<int> acc;
  gen(acc, 0, steps);
  for (const auto& w : weight_sets) {
    Point sample;
    sample.coords.assign(static_cast<size_t>(a[0].dim()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (int k = 0; k < sample.dim(); ++k) sample.coords[static_cast<size_t>(k)] += w[i] * a[i][k];
    if (convex_hulls_intersect({sample}, b)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("hulls_disjoint basics") {
  CHECK(hulls_disjoint({pt({0, 0}), pt({1, 0})}, {pt({0, 1}), pt({1, 1})}));
  CHECK_FALSE(hulls_disjoint({pt({0, 0}), pt({1, 0})}, {pt({1, 0}), pt({2, 1})}));
  const std::vector<Point> tri{pt({0, 0}), pt({2, 0}), pt({0, 2})};
  CHECK_FALSE(hulls_disjoint(tri, {Point({Rational(1), Rational(1, 2)})}));
}

TEST_CASE("hulls_disjoint never contradicts the sampling oracle") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<Point> a, b;
    const int na = 1 + static_cast<int>(rng.next_below(3));
    const int nb = 1 + static_cast<int>(rng.next_below(3));
    for (int i = 0; i < na; ++i)
      a.push_back(pt({static_cast<int>(rng.next_in_range(-5, 5)),
                      static_cast<int>(rng.next_in_range(-5, 5))}));
    for (int i = 0; i < nb; ++i)
      b.push_back(pt({static_cast<int>(rng.next_in_range(-5, 5)),
                      static_cast<int>(rng.next_in_range(-5, 5))}));
    if (sampled_overlap(a, b)) CHECK_FALSE(hulls_disjoint(a, b));
  }
}

TEST_CASE("n=1: a single tuple and no cut tree") {
  const ColoredPointSet ps(2, {{pt({0, 0})}, {pt({1, 2})}});
  const auto rp = rainbow_partition(ps);
  REQUIRE(rp.tuples.size() == 1);
  CHECK(rp.cut_tree == nullptr);
  CHECK(verify_rainbow(ps, rp));
}

TEST_CASE("n=2: the unique non-crossing pairing is found") {
  const ColoredPointSet ps(2, {{pt({0, 0}), pt({10, 0})}, {pt({1, 1}), pt({9, 1})}});
  const auto rp = rainbow_partition(ps);
  REQUIRE(rp.tuples.size() == 2);
  CHECK(verify_rainbow(ps, rp));
  // Brute force over both pairings: only {(0,0),(1,1)} + {(10,0),(9,1)}
  // has disjoint segments, so the output is forced.
  for (const auto& tuple : rp.tuples) {
    REQUIRE(tuple.size() == 2);
    if (tuple[0] == pt({0, 0})) CHECK(tuple[1] == pt({1, 1}));
    if (tuple[0] == pt({10, 0})) CHECK(tuple[1] == pt({9, 1}));
  }
}

TEST_CASE("n=3: odd case peels a tuple off the first cut") {
  const ColoredPointSet ps(2, {{pt({-4, 9}), pt({3, 6}), pt({6, 5})},
                               {pt({2, 4}), pt({-3, 6}), pt({4, -1})}});
  REQUIRE(is_general_position(ps));
  const auto rp = rainbow_partition(ps);
  CHECK(rp.tuples.size() == 3);
  CHECK(verify_rainbow(ps, rp));
  REQUIRE(rp.cut_tree != nullptr);
  CHECK(rp.cut_tree->on_cut_tuple.size() == 2);
}

TEST_CASE("verify_rainbow rejects crossings and reuse") {
  const ColoredPointSet ps(2, {{pt({0, 0}), pt({10, 0})}, {pt({1, 1}), pt({9, 1})}});
  RainbowPartition crossing;
  crossing.tuples = {{pt({0, 0}), pt({9, 1})}, {pt({10, 0}), pt({1, 1})}};
  CHECK_FALSE(verify_rainbow(ps, crossing));

  RainbowPartition reuse;
  reuse.tuples = {{pt({0, 0}), pt({1, 1})}, {pt({0, 0}), pt({9, 1})}};
  CHECK_FALSE(verify_rainbow(ps, reuse));

  RainbowPartition monochrome;
  monochrome.tuples = {{pt({0, 0}), pt({10, 0})}, {pt({1, 1}), pt({9, 1})}};
  CHECK_FALSE(verify_rainbow(ps, monochrome));
}

TEST_CASE("error taxonomy") {
  const ColoredPointSet unequal(2, {{pt({0, 0}), pt({1, 5})}, {pt({2, 3})}});
  CHECK_THROWS_WITH_AS(rainbow_partition(unequal), doctest::Contains("UNEQUAL_CLASS_SIZES"),
                       Error);
  const ColoredPointSet wrong_d(1, {{pt({0})}});
  CHECK_THROWS_WITH_AS(rainbow_partition(wrong_d), doctest::Contains("PARAMETER_RANGE"), Error);
  const ColoredPointSet degen(2, {{pt({0, 0}), pt({1, 0})}, {pt({2, 0}), pt({5, 7})}});
  CHECK_THROWS_WITH_AS(rainbow_partition(degen), doctest::Contains("NOT_GENERAL_POSITION"),
                       Error);
}

TEST_CASE("random planar instances partition cleanly") {
  SplitMix64 rng(311);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(6));
    const auto ps = gen_points(2, {n, n}, 40000 + static_cast<uint64_t>(trial), 400);
    const auto rp = rainbow_partition(ps);
    CHECK(rp.tuples.size() == static_cast<size_t>(n));
    CHECK(verify_rainbow(ps, rp));
    // Loose depth bound: ceil(log2 n) + n.
    int log2n = 0;
    while ((1 << log2n) < n) ++log2n;
    CHECK(tree_depth(rp.cut_tree.get()) <= log2n + n);
  }
}

TEST_CASE("a d=3 instance") {
  const auto ps = gen_points(3, {3, 3, 3}, 777, 200);
  const auto rp = rainbow_partition(ps);
  CHECK(rp.tuples.size() == 3);
  CHECK(verify_rainbow(ps, rp));
}
