#include "topocut/graph.hpp"

#include <algorithm>
#include <bit>

#include "topocut/error.hpp"

namespace topocut {

int64_t DenseGraph::edge_count() const {
  int64_t total = 0;
  for (const auto& row : rows)
    for (uint64_t word : row) total += std::popcount(word);
  return total / 2;
}

int DenseGraph::degree(int v) const {
  int total = 0;
  for (uint64_t word : rows[static_cast<size_t>(v)]) total += std::popcount(word);
  return total;
}

namespace {

struct ColorState {
  const DenseGraph* g;
  int m;
  std::vector<int> color;                 // 0 = uncolored, else 1..m
  std::vector<std::vector<uint64_t>> forbidden;  // vertex -> color bitmask words
  int colored = 0;
  int max_used = 0;

  bool forbidden_has(int v, int c) const {
    return (forbidden[static_cast<size_t>(v)][static_cast<size_t>(c) / 64] >> (c % 64)) & 1;
  }

  int saturation(int v) const {
    int s = 0;
    for (uint64_t w : forbidden[static_cast<size_t>(v)]) s += std::popcount(w);
    return s;
  }

  // Most saturated uncolored vertex; ties by degree then index. Picking the
  // most constrained vertex keeps the search tree small and deterministic.
  int pick() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < g->n; ++v) {
      if (color[static_cast<size_t>(v)] != 0) continue;
      const int sat = saturation(v);
      const int deg = g->degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool solve() {
    if (colored == g->n) return true;
    const int v = pick();
    // Introducing at most one brand-new color breaks color-class symmetry.
    const int limit = std::min(m, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (forbidden_has(v, c)) continue;
      color[static_cast<size_t>(v)] = c;
      const int prev_max = max_used;
      max_used = std::max(max_used, c);
      ++colored;
      std::vector<int> touched;
      for (int u = 0; u < g->n; ++u) {
        if (u == v || !g->has_edge(v, u) || color[static_cast<size_t>(u)] != 0) continue;
        if (!forbidden_has(u, c)) {
          forbidden[static_cast<size_t>(u)][static_cast<size_t>(c) / 64] |= uint64_t{1} << (c % 64);
          touched.push_back(u);
        }
      }
      if (solve()) return true;
      for (int u : touched)
        forbidden[static_cast<size_t>(u)][static_cast<size_t>(c) / 64] &= ~(uint64_t{1} << (c % 64));
      --colored;
      max_used = prev_max;
      color[static_cast<size_t>(v)] = 0;
    }
    return false;
  }
};

}  // namespace

std::vector<int> try_color(const DenseGraph& g, int m) {
  if (g.n == 0) return {};
  ColorState st;
  st.g = &g;
  st.m = m;
  st.color.assign(static_cast<size_t>(g.n), 0);
  st.forbidden.assign(static_cast<size_t>(g.n),
                      std::vector<uint64_t>((static_cast<size_t>(m) + 64) / 64 + 1, 0));
  if (!st.solve()) return {};
  return st.color;
}

int greedy_clique_bound(const DenseGraph& g) {
  // Grow a clique greedily from each vertex in degree order.
  std::vector<int> order(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) order[static_cast<size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const int da = g.degree(a), db = g.degree(b);
    if (da != db) return da > db;
    return a < b;
  });
  int best = g.n > 0 ? 1 : 0;
  for (int seed : order) {
    std::vector<int> clique{seed};
    for (int v : order) {
      if (v == seed) continue;
      bool ok = true;
      for (int u : clique)
        if (!g.has_edge(u, v)) {
          ok = false;
          break;
        }
      if (ok) clique.push_back(v);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

int chromatic_number_exact(const DenseGraph& g) {
  if (g.n > 100) fail(Errc::ParameterRange, "exact chromatic search is limited to 100 vertices");
  if (g.n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  const int lower = std::max(2, greedy_clique_bound(g));
  for (int m = lower; m <= g.n; ++m)
    if (!try_color(g, m).empty()) return m;
  return g.n;
}

}  // namespace topocut
