#pragma once

#include <optional>
#include <vector>

#include "topocut/linalg.hpp"
#include "topocut/point.hpp"

namespace topocut {

// Exact solver for tiny standard-form programs
//     maximize c.x  subject to  A x = b, x >= 0
// by enumerating basic solutions. Correct whenever the feasible region is
// bounded (all uses here are convex-combination systems, which are).
// Returns nullopt when infeasible.
std::optional<Rational> lp_max_bounded(const Matrix& a,
                                       const std::vector<Rational>& b,
                                       const std::vector<Rational>& c);

// Exact test: conv(a) and conv(b) have a common point. Works for arbitrary
// finite point sets of a common dimension.
bool convex_hulls_intersect(const std::vector<Point>& a, const std::vector<Point>& b);

// Exact test: the relative interiors of two simplices share a point. Both
// vertex sets must be affinely independent.
bool relative_interiors_intersect(const std::vector<Point>& a, const std::vector<Point>& b);

}  // namespace topocut
