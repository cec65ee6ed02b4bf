#pragma once

#include <vector>

#include "topocut/graph.hpp"

namespace topocut {

// KG_{n,k}: vertices are the k-subsets of {1..n} in lexicographic order,
// edges join disjoint subsets.
struct KneserGraph {
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> vertices;  // sorted k-subsets, lex order
  DenseGraph graph;
};

struct VertexColoring {
  std::vector<int> colors;  // per vertex, values 1..palette_size
  int palette_size = 0;
};

// Requires n >= 2k-1, k >= 1, C(n,k) <= 10000.
KneserGraph build_kneser(int n, int k);

// The explicit proper coloring with palette n-2k+2: vertex F gets color
// min(min(F), n-2k+2).
VertexColoring explicit_coloring(const KneserGraph& g);

// True iff no edge is monochromatic. Throws Error(IncompleteColoring) when
// some vertex is uncolored or out of palette.
bool is_proper(const KneserGraph& g, const VertexColoring& c);

// Exact chromatic number; requires C(n,k) <= 100.
int chromatic_number(const KneserGraph& g);

}  // namespace topocut
