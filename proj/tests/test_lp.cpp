#include <doctest.h>

#include "topocut/lp.hpp"

using namespace topocut;

namespace {

Point pt(std::vector<Rational> coords) { return Point(std::move(coords)); }

Point pt2(int x, int y) { return pt({Rational(x), Rational(y)}); }

Point pt3(int x, int y, int z) { return pt({Rational(x), Rational(y), Rational(z)}); }

}  // namespace

TEST_CASE("lp_max_bounded on a split simplex") {
  // maximize x0 over x0 + x1 = 1, x >= 0.
  const Matrix a{{Rational(1), Rational(1)}};
  const std::vector<Rational> b{Rational(1)};
  const std::vector<Rational> c{Rational(1), Rational(0)};
  const auto best = lp_max_bounded(a, b, c);
  REQUIRE(best.has_value());
  CHECK(*best == 1);
}

TEST_CASE("lp_max_bounded detects infeasibility") {
  // x0 + x1 = -1 has no nonnegative solution.
  const Matrix a{{Rational(1), Rational(1)}};
  const std::vector<Rational> b{Rational(-1)};
  const std::vector<Rational> c{Rational(0), Rational(0)};
  CHECK_FALSE(lp_max_bounded(a, b, c).has_value());
}

TEST_CASE("segment-segment hull intersection") {
  CHECK_FALSE(convex_hulls_intersect({pt2(0, 0), pt2(1, 0)}, {pt2(0, 1), pt2(1, 1)}));
  CHECK(convex_hulls_intersect({pt2(0, 0), pt2(2, 2)}, {pt2(0, 2), pt2(2, 0)}));
  // Shared endpoint counts as intersection of the closed hulls.
  CHECK(convex_hulls_intersect({pt2(0, 0), pt2(1, 0)}, {pt2(1, 0), pt2(2, 1)}));
  // Collinear cases.
  CHECK_FALSE(convex_hulls_intersect({pt2(0, 0), pt2(1, 0)}, {pt2(2, 0), pt2(3, 0)}));
  CHECK(convex_hulls_intersect({pt2(0, 0), pt2(2, 0)}, {pt2(1, 0), pt2(3, 0)}));
}

TEST_CASE("point versus triangle") {
  const std::vector<Point> tri{pt2(0, 0), pt2(2, 0), pt2(0, 2)};
  CHECK(convex_hulls_intersect(tri, {pt({Rational(1), Rational(1, 2)})}));
  CHECK(convex_hulls_intersect(tri, {pt2(0, 0)}));        // vertex
  CHECK(convex_hulls_intersect(tri, {pt2(1, 1)}));        // on the hypotenuse
  CHECK_FALSE(convex_hulls_intersect(tri, {pt2(3, 3)}));  // outside
}

TEST_CASE("tetrahedra in R^3") {
  const std::vector<Point> a{pt3(0, 0, 0), pt3(4, 0, 0), pt3(0, 4, 0), pt3(0, 0, 4)};
  const std::vector<Point> b{pt3(1, 1, 1), pt3(2, 1, 1), pt3(1, 2, 1), pt3(1, 1, 2)};
  CHECK(convex_hulls_intersect(a, b));  // b sits inside a
  const std::vector<Point> far{pt3(10, 10, 10), pt3(11, 10, 10), pt3(10, 11, 10),
                               pt3(10, 10, 11)};
  CHECK_FALSE(convex_hulls_intersect(a, far));
}

TEST_CASE("relative interiors of simplices") {
  // Sharing only an endpoint: closed hulls intersect, open ones do not.
  CHECK_FALSE(relative_interiors_intersect({pt2(0, 0), pt2(1, 0)}, {pt2(1, 0), pt2(2, 1)}));
  // Overlapping collinear segments share an open stretch.
  CHECK(relative_interiors_intersect({pt2(0, 0), pt2(2, 0)}, {pt2(1, 0), pt2(3, 0)}));
  // A vertex of a triangle is not in the triangle's relative interior.
  const std::vector<Point> tri{pt2(0, 0), pt2(2, 0), pt2(0, 2)};
  CHECK_FALSE(relative_interiors_intersect(tri, {pt2(0, 0)}));
  CHECK(relative_interiors_intersect(tri, {pt({Rational(1, 2), Rational(1, 2)})}));
  // An edge of a triangle: its relative interior lies on the boundary of
  // the triangle but inside the edge, so edge vs triangle interiors meet
  // nowhere, while edge vs the same edge does.
  const std::vector<Point> edge{pt2(0, 0), pt2(2, 0)};
  CHECK_FALSE(relative_interiors_intersect(tri, edge));
  CHECK(relative_interiors_intersect(edge, edge));
  // Crossing segments meet in an interior point.
  CHECK(relative_interiors_intersect({pt2(0, 0), pt2(2, 2)}, {pt2(0, 2), pt2(2, 0)}));
}
