#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "topocut/graph.hpp"
#include "topocut/hyperplane.hpp"
#include "topocut/point.hpp"

namespace topocut {

// Hypergraph on ground set {1..ground_size}; hyperedges are canonically
// sorted and deduplicated on construction.
struct Hypergraph {
  int ground_size = 0;
  std::vector<std::vector<int>> edges;

  Hypergraph() = default;
  // Sorts each edge, drops duplicates, validates element ranges and
  // nonemptiness. Throws Error(SchemaError) on violations.
  Hypergraph(int ground, std::vector<std::vector<int>> raw_edges);
};

struct DefectCertificate {
  int m = 0;
  int defect = 0;
  std::vector<int> witness_removed;  // the minimal Y, sorted
  // Color (1..m) per surviving ground element, indexed in ascending element
  // order of X \ Y.
  std::vector<int> witness_coloring;
};

// A coloring of the ground set with no monochromatic hyperedge, or nullopt.
// Backtracking over elements; requires ground_size <= 16 and m >= 1.
std::optional<std::vector<int>> is_m_colorable(const Hypergraph& h, int m);

// Minimal |Y| such that dropping Y (with every hyperedge meeting it) leaves
// an m-colorable hypergraph, with witnesses; the search ascends by |Y| in
// lexicographic order, so the certificate is minimal by construction.
// Requires ground_size <= 14.
DefectCertificate colorability_defect(const Hypergraph& h, int m);

// Disjointness graph of the hyperedges (vertices in canonical edge order).
// Requires at most 200 hyperedges.
DenseGraph kneser_graph_of(const Hypergraph& h);

struct DolnikovReport {
  int chi = 0;
  int cd2 = 0;
  bool holds = false;
};

// Computes chi(KG(F)) and cd_2(F) exactly and reports whether
// chi >= cd_2 (it must; holds == false is a hard bug signal).
DolnikovReport check_dolnikov(const Hypergraph& h);

// Desk-scale exhaustive verification of the inequality over every
// hypergraph on a ground set of the given size, one representative per
// isomorphism class (canonical = minimal edge-set bitmask under ground
// permutations). Returns the number of classes checked; throws
// Error(SearchExhausted) if any class violated the inequality.
// Requires 1 <= ground_size <= 5.
int64_t verify_dolnikov_exhaustive(int ground_size);

// Exact Burnside count of hypergraph isomorphism classes on the given
// ground size; cross-checks the exhaustive enumeration.
int64_t count_hypergraph_classes(int ground_size);

// Searches for a hyperplane meeting the convex hull of every member of
// every family. Preconditions: d in {1,2}, each family pairwise
// intersecting (checked; Error(NotIntersectingFamily) otherwise), member
// sets of at most 4 points, at most 20 points total. The underlying
// proposition guarantees existence, so nullopt is a hard bug signal.
std::optional<Hyperplane> transversal_hyperplane_exists(
    const std::vector<std::vector<std::vector<Point>>>& families, int dimension);

}  // namespace topocut
