#pragma once

#include <vector>

#include "topocut/colored_point_set.hpp"
#include "topocut/hyperplane.hpp"
#include "topocut/point.hpp"

namespace topocut {

// Sign of the determinant of the d x d matrix with rows p_i - p_0 for the
// d+1 input points of R^d. Zero exactly when the points are affinely
// dependent, i.e. lie on a common hyperplane.
int orientation(const std::vector<Point>& points);

// True iff the difference vectors p_i - p_0 are linearly independent
// (exact rank test). A single point is affinely independent.
bool is_affinely_independent(const std::vector<Point>& points);

// True iff all points across classes are pairwise distinct and no d+1
// points of the union lie on a common hyperplane, tested by orientation
// over every (d+1)-subset.
bool is_general_position(const ColoredPointSet& ps);

// Same test for a plain point collection.
bool is_general_position(const std::vector<Point>& points, int dimension);

// The unique hyperplane through d affinely independent points of R^d, in
// canonical form. Throws Error(DegenerateSpan) when the points are affinely
// dependent and Error(DimensionMismatch) on shape violations.
Hyperplane hyperplane_through(const std::vector<Point>& points);

// (t, t^2, ..., t^d), exactly.
Point moment_curve_point(const Rational& t, int d);

}  // namespace topocut
