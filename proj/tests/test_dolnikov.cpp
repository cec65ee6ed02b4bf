#include <doctest.h>

#include <algorithm>

#include "topocut/dolnikov.hpp"
#include "topocut/error.hpp"
#include "topocut/generators.hpp"
#include "topocut/kneser.hpp"
#include "topocut/rng.hpp"

using namespace topocut;

namespace {

std::vector<std::vector<int>> all_k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int x = start; x <= n; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

Point pt(std::vector<int> coords) {
  Point p;
  for (int c : coords) p.coords.emplace_back(c);
  return p;
}

}  // namespace

TEST_CASE("hypergraph canonicalization") {
  const Hypergraph h(4, {{3, 1}, {1, 3}, {2}, {2}});
  CHECK(h.edges == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK_THROWS_AS(Hypergraph(2, {{5}}), Error);
  CHECK_THROWS_AS(Hypergraph(2, {{}}), Error);
}

TEST_CASE("is_m_colorable on reference cases") {
  // A singleton hyperedge can never be non-monochromatic.
  const Hypergraph singleton(3, {{2}});
  for (int m = 1; m <= 3; ++m) CHECK_FALSE(is_m_colorable(singleton, m).has_value());

  // No hyperedges: the all-1 coloring works.
  const Hypergraph empty(3, {});
  const auto c = is_m_colorable(empty, 1);
  REQUIRE(c.has_value());
  CHECK(*c == std::vector<int>{1, 1, 1});

  // All 2-subsets of [4]: colorable iff the coloring is injective.
  const Hypergraph k4(4, all_k_subsets(4, 2));
  CHECK_FALSE(is_m_colorable(k4, 2).has_value());
  CHECK_FALSE(is_m_colorable(k4, 3).has_value());
  const auto c4 = is_m_colorable(k4, 4);
  REQUIRE(c4.has_value());
  std::vector<int> sorted = *c4;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("colorability defect examples") {
  const Hypergraph pairs5(5, all_k_subsets(5, 2));
  const auto cert = colorability_defect(pairs5, 2);
  CHECK(cert.defect == 3);
  CHECK(cert.witness_removed.size() == 3);

  const Hypergraph empty(4, {});
  CHECK(colorability_defect(empty, 2).defect == 0);

  // cd_2(all k-subsets of [n]) = n - 2k + 2 at desk scale.
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; 2 * k <= n + 1 && k <= 3; ++k) {
      const Hypergraph h(n, all_k_subsets(n, k));
      const int expect = std::max(0, n - 2 * k + 2);
      CHECK(colorability_defect(h, 2).defect == expect);
    }
}

TEST_CASE("defect witnesses are consistent") {
  const Hypergraph pairs5(5, all_k_subsets(5, 2));
  const auto cert = colorability_defect(pairs5, 2);
  // Surviving hyperedges (disjoint from Y) must be non-monochromatic under
  // the witness coloring of X \ Y.
  std::vector<int> color(6, 0);
  std::vector<int> survivors;
  for (int x = 1; x <= 5; ++x)
    if (std::find(cert.witness_removed.begin(), cert.witness_removed.end(), x) ==
        cert.witness_removed.end())
      survivors.push_back(x);
  REQUIRE(survivors.size() == cert.witness_coloring.size());
  for (size_t i = 0; i < survivors.size(); ++i)
    color[static_cast<size_t>(survivors[i])] = cert.witness_coloring[i];
  for (const auto& e : pairs5.edges) {
    bool hits_y = false;
    for (int x : e)
      if (color[static_cast<size_t>(x)] == 0) hits_y = true;
    if (hits_y) continue;
    bool mono = true;
    for (int x : e)
      if (color[static_cast<size_t>(x)] != color[static_cast<size_t>(e[0])]) mono = false;
    CHECK_FALSE(mono);
  }
}

TEST_CASE("kneser_graph_of mirrors build_kneser on complete set systems") {
  const Hypergraph pairs5(5, all_k_subsets(5, 2));
  const auto g = kneser_graph_of(pairs5);
  const auto reference = build_kneser(5, 2);
  REQUIRE(g.n == static_cast<int>(reference.vertices.size()));
  // Canonical hyperedge order is the same lexicographic subset order.
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      CHECK(g.has_edge(u, v) == reference.graph.has_edge(u, v));

  const Hypergraph nested(2, {{1}, {1, 2}});
  CHECK(kneser_graph_of(nested).edge_count() == 0);
  const Hypergraph disjoint(2, {{1}, {2}});
  CHECK(kneser_graph_of(disjoint).edge_count() == 1);
}

TEST_CASE("check_dolnikov on reference cases") {
  const auto r1 = check_dolnikov(Hypergraph(5, all_k_subsets(5, 2)));
  CHECK(r1.chi == 3);
  CHECK(r1.cd2 == 3);
  CHECK(r1.holds);

  const auto r2 = check_dolnikov(Hypergraph(1, {{1}}));
  CHECK(r2.chi == 1);
  CHECK(r2.cd2 == 1);
  CHECK(r2.holds);

  const auto r3 = check_dolnikov(Hypergraph(4, {{1, 2}, {3, 4}}));
  CHECK(r3.chi == 2);
  CHECK(r3.cd2 <= 2);
  CHECK(r3.holds);
}

TEST_CASE("defect is monotone under adding hyperedges") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const int ground = 3 + static_cast<int>(rng.next_below(3));
    const auto base = gen_hypergraph(ground, 3, 100 + static_cast<uint64_t>(trial));
    auto extended_edges = base.edges;
    const auto extra = gen_hypergraph(ground, 2, 500 + static_cast<uint64_t>(trial));
    for (const auto& e : extra.edges) extended_edges.push_back(e);
    const Hypergraph extended(ground, std::move(extended_edges));
    CHECK(colorability_defect(base, 2).defect <= colorability_defect(extended, 2).defect);
  }
}

TEST_CASE("defect is unchanged by isolated ground elements") {
  SplitMix64 rng(515);
  for (int trial = 0; trial < 20; ++trial) {
    const int ground = 3 + static_cast<int>(rng.next_below(3));
    const auto h = gen_hypergraph(ground, 4, 300 + static_cast<uint64_t>(trial));
    const Hypergraph wider(ground + 2, std::vector<std::vector<int>>(h.edges));
    CHECK(colorability_defect(h, 2).defect == colorability_defect(wider, 2).defect);
  }
}

TEST_CASE("m-colorability is monotone in m") {
  SplitMix64 rng(4048);
  for (int trial = 0; trial < 30; ++trial) {
    const int ground = 3 + static_cast<int>(rng.next_below(3));
    const auto h = gen_hypergraph(ground, 4, 900 + static_cast<uint64_t>(trial));
    for (int m = 1; m <= 3; ++m)
      if (is_m_colorable(h, m)) CHECK(is_m_colorable(h, m + 1).has_value());
  }
}

TEST_CASE("exhaustive engine agrees with the API on tiny grounds") {
  // Every hypergraph on [3]: the engine's cd2 equals colorability_defect's
  // and the inequality holds.
  for (int g = 1; g <= 3; ++g) {
    const int slots = (1 << g) - 1;
    for (uint32_t mask = 0; mask < (uint32_t{1} << slots); ++mask) {
      std::vector<std::vector<int>> edges;
      for (int s = 1; s <= slots; ++s) {
        if (!(mask & (uint32_t{1} << (s - 1)))) continue;
        std::vector<int> e;
        for (int i = 0; i < g; ++i)
          if (s & (1 << i)) e.push_back(i + 1);
        edges.push_back(std::move(e));
      }
      const Hypergraph h(g, std::move(edges));
      const auto report = check_dolnikov(h);
      CHECK(report.holds);
    }
  }
}

TEST_CASE("isomorphism-free counts match Burnside") {
  CHECK(count_hypergraph_classes(1) == 2);
  CHECK(count_hypergraph_classes(2) == 6);
  CHECK(verify_dolnikov_exhaustive(1) == 2);
  CHECK(verify_dolnikov_exhaustive(2) == 6);
  CHECK(verify_dolnikov_exhaustive(3) == count_hypergraph_classes(3));
  CHECK(verify_dolnikov_exhaustive(4) == count_hypergraph_classes(4));
}

TEST_CASE("transversal hyperplane: overlapping intervals on the line") {
  const std::vector<std::vector<std::vector<Point>>> families{
      {{pt({0}), pt({4})}, {pt({2}), pt({7})}, {pt({3}), pt({5})}}};
  const auto h = transversal_hyperplane_exists(families, 1);
  REQUIRE(h.has_value());
  // The found point must be in every interval: 3 <= x <= 4.
  const Rational x = h->offset / h->normal[0];
  CHECK(x >= 3);
  CHECK(x <= 4);
}

TEST_CASE("transversal hyperplane: two families of overlapping triangles") {
  const std::vector<std::vector<std::vector<Point>>> families{
      {{pt({0, 0}), pt({4, 0}), pt({0, 4})}, {pt({1, 1}), pt({5, 1}), pt({1, 5})}},
      {{pt({10, 0}), pt({14, 0}), pt({10, 4})}, {pt({11, 1}), pt({15, 1}), pt({11, 5})}}};
  const auto h = transversal_hyperplane_exists(families, 2);
  REQUIRE(h.has_value());
  for (const auto& family : families)
    for (const auto& member : family) {
      bool nonneg = false, nonpos = false;
      for (const auto& p : member) {
        const int s = sign_of(h->evaluate(p));
        nonneg |= (s >= 0);
        nonpos |= (s <= 0);
      }
      CHECK(nonneg);
      CHECK(nonpos);
    }
}

TEST_CASE("transversal precondition: families must be intersecting") {
  const std::vector<std::vector<std::vector<Point>>> families{
      {{pt({0, 0}), pt({1, 0})}, {pt({5, 5}), pt({6, 5})}}};
  CHECK_THROWS_WITH_AS(transversal_hyperplane_exists(families, 2),
                       doctest::Contains("NOT_INTERSECTING_FAMILY"), Error);
}
