#include "topocut/kneser.hpp"

#include <algorithm>

#include "topocut/detail/combinatorics.hpp"
#include "topocut/error.hpp"

namespace topocut {

namespace {

int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  int64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

bool disjoint_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i;
    else ++j;
  }
  return true;
}

}  // namespace

KneserGraph build_kneser(int n, int k) {
  if (k < 1 || n < 2 * k - 1) fail(Errc::ParameterRange, "need k >= 1 and n >= 2k-1");
  if (binomial(n, k) > 10000) fail(Errc::ParameterRange, "C(n,k) exceeds 10000");

  KneserGraph g;
  g.n = n;
  g.k = k;
  detail::for_each_subset(static_cast<size_t>(n), static_cast<size_t>(k),
                          [&](const std::vector<size_t>& idx) {
                            std::vector<int> subset;
                            subset.reserve(idx.size());
                            for (size_t e : idx) subset.push_back(static_cast<int>(e) + 1);
                            g.vertices.push_back(std::move(subset));
                            return true;
                          });
  const int count = static_cast<int>(g.vertices.size());
  g.graph.reset(count);
  for (int u = 0; u < count; ++u)
    for (int v = u + 1; v < count; ++v)
      if (disjoint_sorted(g.vertices[static_cast<size_t>(u)], g.vertices[static_cast<size_t>(v)]))
        g.graph.add_edge(u, v);
  return g;
}

VertexColoring explicit_coloring(const KneserGraph& g) {
  VertexColoring c;
  c.palette_size = g.n - 2 * g.k + 2;
  c.colors.reserve(g.vertices.size());
  for (const auto& subset : g.vertices)
    c.colors.push_back(std::min(subset.front(), c.palette_size));
  return c;
}

bool is_proper(const KneserGraph& g, const VertexColoring& c) {
  if (c.colors.size() != g.vertices.size())
    fail(Errc::IncompleteColoring, "coloring must assign every vertex");
  for (int color : c.colors)
    if (color < 1 || color > c.palette_size)
      fail(Errc::IncompleteColoring, "color outside the palette");
  const int count = static_cast<int>(g.vertices.size());
  for (int u = 0; u < count; ++u)
    for (int v = u + 1; v < count; ++v)
      if (g.graph.has_edge(u, v) &&
          c.colors[static_cast<size_t>(u)] == c.colors[static_cast<size_t>(v)])
        return false;
  return true;
}

int chromatic_number(const KneserGraph& g) {
  return chromatic_number_exact(g.graph);
}

}  // namespace topocut
