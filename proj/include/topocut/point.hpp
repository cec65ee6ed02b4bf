#pragma once

#include <compare>
#include <vector>

#include "topocut/rational.hpp"

namespace topocut {

// A point of R^d with exact rational coordinates.
struct Point {
  std::vector<Rational> coords;

  Point() = default;
  explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}

  int dim() const { return static_cast<int>(coords.size()); }

  const Rational& operator[](int i) const { return coords[static_cast<size_t>(i)]; }
  Rational& operator[](int i) { return coords[static_cast<size_t>(i)]; }

  bool operator==(const Point& other) const { return coords == other.coords; }
  bool operator!=(const Point& other) const { return coords != other.coords; }
  // Lexicographic coordinate order; used everywhere a deterministic point
  // ordering is needed (canonical tuples, certificate serialization).
  bool operator<(const Point& other) const { return coords < other.coords; }
};

}  // namespace topocut
