#pragma once

#include <vector>

#include "topocut/point.hpp"

namespace topocut {

// d color classes of points in R^d. Class i holds the points of color i.
// All points are pairwise distinct across the whole structure and share the
// ambient dimension.
struct ColoredPointSet {
  int dimension = 0;
  std::vector<std::vector<Point>> classes;

  ColoredPointSet() = default;
  ColoredPointSet(int dim, std::vector<std::vector<Point>> cls)
      : dimension(dim), classes(std::move(cls)) {}

  int num_classes() const { return static_cast<int>(classes.size()); }

  size_t total_points() const {
    size_t total = 0;
    for (const auto& cls : classes) total += cls.size();
    return total;
  }

  std::vector<Point> all_points() const {
    std::vector<Point> flat;
    flat.reserve(total_points());
    for (const auto& cls : classes)
      for (const auto& p : cls) flat.push_back(p);
    return flat;
  }

  // Throws Error(DimensionMismatch) on a coordinate-length violation.
  // Pairwise distinctness of points is part of is_general_position, so that
  // degenerate inputs are reported as NOT_GENERAL_POSITION (fixable with
  // perturb) rather than rejected at parse time.
  void validate() const;
};

}  // namespace topocut
