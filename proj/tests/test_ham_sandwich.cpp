#include <doctest.h>

#include <algorithm>

#include "topocut/error.hpp"
#include "topocut/generators.hpp"
#include "topocut/ham_sandwich.hpp"
#include "topocut/predicates.hpp"
#include "topocut/rng.hpp"

using namespace topocut;

namespace {

Point pt(std::vector<int> coords) {
  Point p;
  for (int c : coords) p.coords.emplace_back(c);
  return p;
}

ColoredPointSet line_instance(std::vector<int> values) {
  std::vector<Point> points;
  for (int v : values) points.push_back(pt({v}));
  return ColoredPointSet(1, {points});
}

}  // namespace

TEST_CASE("d=1 even class: cut strictly between the middle points") {
  const auto ps = line_instance({1, 2, 3, 4});
  const auto cert = find_cut(ps);
  CHECK(cert.per_class_counts == std::vector<SideCounts>{{2, 0, 2}});
  CHECK(verify_cut(ps, cert));
  // The cut is a point strictly between 2 and 3.
  const Rational x = cert.cut.offset / cert.cut.normal[0];
  CHECK(x > 2);
  CHECK(x < 3);
}

TEST_CASE("d=1 odd class: cut through the median") {
  const auto ps = line_instance({1, 2, 3});
  const auto cert = find_cut(ps);
  CHECK(cert.per_class_counts == std::vector<SideCounts>{{1, 1, 1}});
  CHECK(verify_cut(ps, cert));
  CHECK(cert.cut.side_of(pt({2})) == Side::On);
}

TEST_CASE("d=2 all-odd reference instance") {
  const ColoredPointSet ps(2, {{pt({0, 0}), pt({4, 0}), pt({2, 5})},
                               {pt({0, 3}), pt({4, 3}), pt({2, -2})}});
  REQUIRE(is_general_position(ps));
  const auto cert = find_cut(ps);
  CHECK(verify_cut(ps, cert));
  for (const auto& counts : cert.per_class_counts) {
    CHECK(counts[0] == 1);
    CHECK(counts[1] == 1);
    CHECK(counts[2] == 1);
  }
}

TEST_CASE("verify_cut rejects translated cuts and tampered counts") {
  const auto ps = line_instance({1, 2, 3});
  auto cert = find_cut(ps);
  REQUIRE(verify_cut(ps, cert));

  auto far = cert;
  far.cut.offset += 1000;  // beyond all points
  CHECK_FALSE(verify_cut(ps, far));

  auto tampered = cert;
  tampered.per_class_counts[0] = {3, 0, 0};
  CHECK_FALSE(verify_cut(ps, tampered));
}

TEST_CASE("error taxonomy") {
  // Class count must match the dimension.
  const ColoredPointSet wrong(2, {{pt({0, 0})}});
  CHECK_THROWS_WITH_AS(find_cut(wrong), doctest::Contains("CLASS_COUNT_MISMATCH"), Error);

  // Collinear triple in one class: not general position.
  const ColoredPointSet degenerate(2, {{pt({0, 0}), pt({1, 0}), pt({2, 0})},
                                       {pt({0, 1}), pt({1, 2}), pt({5, 7})}});
  CHECK_THROWS_WITH_AS(find_cut(degenerate), doctest::Contains("NOT_GENERAL_POSITION"), Error);
}

TEST_CASE("oracle: d=1 odd line") {
  const auto ps = line_instance({1, 2, 3});
  const auto cuts = enumerate_all_cuts(ps);
  REQUIRE(cuts.size() == 1);
  CHECK(cuts[0].cut.side_of(pt({2})) == Side::On);
}

TEST_CASE("oracle: two single points") {
  const ColoredPointSet ps(2, {{pt({0, 0})}, {pt({2, 1})}});
  const auto cuts = enumerate_all_cuts(ps);
  REQUIRE(cuts.size() == 1);
  CHECK(cuts[0].cut.side_of(pt({0, 0})) == Side::On);
  CHECK(cuts[0].cut.side_of(pt({2, 1})) == Side::On);
  // find_cut returns a member of the oracle set.
  const auto cert = find_cut(ps);
  CHECK(cert.cut == cuts[0].cut);
}

TEST_CASE("oracle contains find_cut's certificate on all-odd instances") {
  SplitMix64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + static_cast<int>(rng.next_below(3));
    std::vector<int> sizes;
    for (int c = 0; c < d; ++c)
      sizes.push_back(1 + 2 * static_cast<int>(rng.next_below(3)));  // odd, <= 5
    const auto ps = gen_points(d, sizes, 1000 + static_cast<uint64_t>(trial), 200);
    const auto cert = find_cut(ps);
    CHECK(verify_cut(ps, cert));
    const auto cuts = enumerate_all_cuts(ps);
    const bool member = std::any_of(cuts.begin(), cuts.end(),
                                    [&](const BisectionCertificate& c) {
                                      return c.cut == cert.cut;
                                    });
    CHECK(member);
    // find_cut picks the lexicographically smallest spanned cut.
    REQUIRE(!cuts.empty());
    CHECK(cert.cut == cuts.front().cut);
  }
}

TEST_CASE("existence and soundness over random instances") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + static_cast<int>(rng.next_below(3));
    std::vector<int> sizes;
    for (int c = 0; c < d; ++c) sizes.push_back(1 + static_cast<int>(rng.next_below(8)));
    const auto ps = gen_points(d, sizes, 5000 + static_cast<uint64_t>(trial), 500);
    const auto cert = find_cut(ps);
    CHECK(verify_cut(ps, cert));
    for (size_t c = 0; c < sizes.size(); ++c) {
      // Odd-cardinality contact: exactly one point on the cut; even
      // classes stay clear of it.
      CHECK(cert.per_class_counts[c][1] == sizes[c] % 2);
    }
  }
}

TEST_CASE("mixed parity instances floor-bisect the original classes") {
  // One odd and one even class in the plane.
  const ColoredPointSet ps(2, {{pt({0, 0}), pt({7, 1}), pt({3, 9})},
                               {pt({1, 4}), pt({6, 5}), pt({4, -3}), pt({9, 2})}});
  REQUIRE(is_general_position(ps));
  const auto cert = find_cut(ps);
  CHECK(verify_cut(ps, cert));
  CHECK(cert.per_class_counts[0] == SideCounts{1, 1, 1});
  CHECK(cert.per_class_counts[1] == SideCounts{2, 0, 2});
}

TEST_CASE("all-even instance in the plane") {
  const ColoredPointSet ps(2, {{pt({0, 0}), pt({8, 1}), pt({3, 7}), pt({5, -2})},
                               {pt({1, 3}), pt({7, 4}), pt({2, -6}), pt({9, 9})}});
  REQUIRE(is_general_position(ps));
  const auto cert = find_cut(ps);
  CHECK(verify_cut(ps, cert));
  CHECK(cert.per_class_counts[0] == SideCounts{2, 0, 2});
  CHECK(cert.per_class_counts[1] == SideCounts{2, 0, 2});
}

TEST_CASE("tiny instances, including empty classes") {
  // d=2 with one point and an empty class: any line through the point.
  const ColoredPointSet ps(2, {{pt({3, 4})}, {}});
  const auto cert = find_cut(ps);
  CHECK(verify_cut(ps, cert));
  CHECK(cert.cut.side_of(pt({3, 4})) == Side::On);

  // All classes empty.
  const ColoredPointSet empty(2, {{}, {}});
  const auto cert2 = find_cut(empty);
  CHECK(verify_cut(empty, cert2));

  // One odd singleton class, one even pair class in d = 2: the cut passes
  // through the singleton and separates the pair.
  const ColoredPointSet mixed(2, {{pt({0, 0})}, {pt({5, 1}), pt({5, 3})}});
  const auto cert3 = find_cut(mixed);
  CHECK(verify_cut(mixed, cert3));
  CHECK(cert3.per_class_counts[0] == SideCounts{0, 1, 0});
  CHECK(cert3.per_class_counts[1] == SideCounts{1, 0, 1});
}

TEST_CASE("tiny instances may be affinely degenerate") {
  // With at most d points the general-position test is vacuous, so the
  // solver must cope with dependent alignments: three collinear points in
  // R^4 plus a singleton class.
  const ColoredPointSet ps(4, {{pt({0, 0, 0, 0}), pt({1, 1, 0, 0}), pt({2, 2, 0, 0})},
                               {pt({5, 3, 2, 1})},
                               {},
                               {}});
  REQUIRE(is_general_position(ps));
  const auto cert = find_cut(ps);
  CHECK(verify_cut(ps, cert));
  CHECK(cert.per_class_counts[0] == SideCounts{1, 1, 1});
  CHECK(cert.per_class_counts[1] == SideCounts{0, 1, 0});
}

TEST_CASE("find_cut is deterministic") {
  SplitMix64 rng(131);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 1 + static_cast<int>(rng.next_below(3));
    std::vector<int> sizes;
    for (int c = 0; c < d; ++c) sizes.push_back(1 + static_cast<int>(rng.next_below(6)));
    const auto ps = gen_points(d, sizes, 9000 + static_cast<uint64_t>(trial), 300);
    const auto a = find_cut(ps);
    const auto b = find_cut(ps);
    CHECK(a.cut == b.cut);
    CHECK(a.per_class_counts == b.per_class_counts);
  }
}

TEST_CASE("d=4 via moment-curve points") {
  // Eight points of each parity class on the moment curve in R^4.
  ColoredPointSet ps(4, {});
  ps.classes.resize(4);
  for (int t = 1; t <= 12; ++t)
    ps.classes[static_cast<size_t>((t - 1) % 4)].push_back(moment_curve_point(Rational(t), 4));
  FindCutOptions opts;
  opts.assume_general_position = true;  // Vandermonde
  const auto cert = find_cut(ps, opts);
  CHECK(verify_cut(ps, cert));
}
