#pragma once

#include <vector>

#include "topocut/point.hpp"
#include "topocut/rational.hpp"

namespace topocut {

// Exact side classification of a point against an oriented hyperplane.
enum class Side { PositiveOpen, On, NegativeOpen };

// Affine hyperplane {x : <normal, x> = offset} with the orientation
// convention h+ = {x : <normal, x> <= offset}. PositiveOpen therefore means
// <normal, x> < offset and NegativeOpen means <normal, x> > offset.
struct Hyperplane {
  std::vector<Rational> normal;
  Rational offset;

  int dim() const { return static_cast<int>(normal.size()); }

  // <normal, p> - offset, exactly.
  Rational evaluate(const Point& p) const;
  Side side_of(const Point& p) const;

  // Scales to the canonical representative: integer entries in lowest terms
  // with the first nonzero normal entry positive. Makes hyperplane equality
  // decidable and certificates stable across runs.
  void canonicalize();

  bool operator==(const Hyperplane& o) const {
    return normal == o.normal && offset == o.offset;
  }
  bool operator<(const Hyperplane& o) const {
    if (normal != o.normal) return normal < o.normal;
    return offset < o.offset;
  }
};

}  // namespace topocut
