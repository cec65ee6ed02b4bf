#pragma once

#include <cstdint>
#include <vector>

namespace topocut {

// Dense undirected graph on vertices 0..n-1, adjacency kept as bitset rows.
// Sized for the exact-search routines (chromatic number caps at 100
// vertices; construction allows more for counting-only uses).
struct DenseGraph {
  int n = 0;
  std::vector<std::vector<uint64_t>> rows;

  explicit DenseGraph(int vertices = 0) { reset(vertices); }

  void reset(int vertices) {
    n = vertices;
    rows.assign(static_cast<size_t>(n),
                std::vector<uint64_t>((static_cast<size_t>(n) + 63) / 64, 0));
  }

  void add_edge(int u, int v) {
    rows[static_cast<size_t>(u)][static_cast<size_t>(v) / 64] |= uint64_t{1} << (v % 64);
    rows[static_cast<size_t>(v)][static_cast<size_t>(u) / 64] |= uint64_t{1} << (u % 64);
  }

  bool has_edge(int u, int v) const {
    return (rows[static_cast<size_t>(u)][static_cast<size_t>(v) / 64] >> (v % 64)) & 1;
  }

  int64_t edge_count() const;
  int degree(int v) const;
};

// Exact chromatic number by iterative deepening over a backtracking
// m-coloring search (most-saturated-vertex-first, new colors introduced in
// order). Deterministic. Throws Error(ParameterRange) when n > 100.
int chromatic_number_exact(const DenseGraph& g);

// Backtracking m-colorability; returns a coloring (values 1..m, vertex
// order) or an empty vector when none exists.
std::vector<int> try_color(const DenseGraph& g, int m);

// Deterministic greedy clique, used as a lower bound seed.
int greedy_clique_bound(const DenseGraph& g);

}  // namespace topocut
