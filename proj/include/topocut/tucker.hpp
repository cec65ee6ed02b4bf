#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "topocut/point.hpp"

namespace topocut {

// Abstract geometric triangulation of the ball B^n (n in {1,2}) whose
// boundary vertex set is closed under negation. Simplices are stored as
// sorted vertex-index tuples and include every face.
struct SymmetricTriangulation {
  int n = 0;
  std::vector<Point> vertices;
  std::vector<std::vector<int>> simplices;
  // Involution on boundary vertex indices; antipode(v) has the negated
  // coordinates of v.
  std::map<int, int> boundary_antipode;
};

// Vertex labels in {+1,-1,...,+n,-n}, antipodal on the boundary.
struct TuckerLabeling {
  std::map<int, int> labels;
};

// n = 1: the path -1 = x_0 < ... < x_{2r} = 1.
// n = 2: 2r boundary vertices on the rational unit circle in antipodal
// pairs plus the center, fan triangulated; r >= 2 (two antipodal boundary
// vertices cannot triangulate a disk). Throws Error(ParameterRange).
SymmetricTriangulation build_disk_triangulation(int n, int resolution);

// Checks the simplicial-complex conditions (faces present, any two
// simplices meet in a common face, simplices geometrically non-degenerate
// with pairwise disjoint relative interiors) plus the boundary involution
// (fixed-point-free, negated coordinates, domain exactly the combinatorial
// boundary vertices).
bool validate_complex(const SymmetricTriangulation& t);

// Lexicographically first edge whose endpoint labels are opposite, or
// nullopt. Throws Error(InvalidLabeling) when the labeling is incomplete,
// out of range, or not antipodal on the boundary.
std::optional<std::pair<int, int>> find_complementary_edge(const SymmetricTriangulation& t,
                                                           const TuckerLabeling& lab);

// Streams every labeling that satisfies the boundary antipodality
// constraint exactly once (free choices: one per boundary antipodal pair,
// one per interior vertex). Throws Error(ParameterRange) when the total
// count exceeds 10^6. Stops early when fn returns false.
void enumerate_labelings(const SymmetricTriangulation& t,
                         const std::function<bool(const TuckerLabeling&)>& fn);

// Closed-form count of antipodal labelings, for cross-checks.
uint64_t count_labelings(const SymmetricTriangulation& t);

}  // namespace topocut
