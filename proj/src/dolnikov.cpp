#include "topocut/dolnikov.hpp"

#include <algorithm>
#include <set>

#include "topocut/detail/combinatorics.hpp"
#include "topocut/error.hpp"
#include "topocut/lp.hpp"
#include "topocut/predicates.hpp"

namespace topocut {

Hypergraph::Hypergraph(int ground, std::vector<std::vector<int>> raw_edges)
    : ground_size(ground) {
  if (ground < 0) fail(Errc::SchemaError, "negative ground set size");
  std::set<std::vector<int>> canonical;
  for (auto& e : raw_edges) {
    if (e.empty()) fail(Errc::SchemaError, "empty hyperedge");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    for (int x : e)
      if (x < 1 || x > ground) fail(Errc::SchemaError, "hyperedge element out of range");
    canonical.insert(std::move(e));
  }
  edges.assign(canonical.begin(), canonical.end());
}

std::optional<std::vector<int>> is_m_colorable(const Hypergraph& h, int m) {
  if (h.ground_size > 16) fail(Errc::ParameterRange, "colorability search needs |X| <= 16");
  if (m < 1) fail(Errc::ParameterRange, "need m >= 1");
  const int n = h.ground_size;

  // Any singleton hyperedge is monochromatic under every coloring.
  for (const auto& e : h.edges)
    if (e.size() == 1) return std::nullopt;

  // Backtracking over elements 1..n; a hyperedge prunes the branch once all
  // its elements share one color.
  std::vector<int> color(static_cast<size_t>(n) + 1, 0);
  std::vector<std::vector<size_t>> edges_with(static_cast<size_t>(n) + 1);
  for (size_t i = 0; i < h.edges.size(); ++i)
    for (int x : h.edges[i]) edges_with[static_cast<size_t>(x)].push_back(i);

  std::function<bool(int)> assign = [&](int x) -> bool {
    if (x > n) return true;
    for (int c = 1; c <= m; ++c) {
      color[static_cast<size_t>(x)] = c;
      bool ok = true;
      for (size_t ei : edges_with[static_cast<size_t>(x)]) {
        const auto& e = h.edges[ei];
        // Monochromatic so far and fully colored up to x => dead branch.
        bool mono = true;
        bool complete = true;
        for (int y : e) {
          if (y > x) { complete = false; continue; }
          if (color[static_cast<size_t>(y)] != c) { mono = false; break; }
        }
        if (mono && complete) { ok = false; break; }
      }
      if (ok && assign(x + 1)) return true;
    }
    color[static_cast<size_t>(x)] = 0;
    return false;
  };
  if (!assign(1)) return std::nullopt;
  return std::vector<int>(color.begin() + 1, color.end());
}

DefectCertificate colorability_defect(const Hypergraph& h, int m) {
  if (h.ground_size > 14) fail(Errc::ParameterRange, "defect search needs |X| <= 14");
  const int n = h.ground_size;
  for (int ysize = 0; ysize <= n; ++ysize) {
    DefectCertificate out;
    const bool found = !detail::for_each_subset(
        static_cast<size_t>(n), static_cast<size_t>(ysize),
        [&](const std::vector<size_t>& idx) {
          std::vector<bool> removed(static_cast<size_t>(n) + 1, false);
          for (size_t i : idx) removed[i + 1] = true;

          // Survivors keep their relative order; relabel to 1..|X\Y|.
          std::vector<int> survivors;
          for (int x = 1; x <= n; ++x)
            if (!removed[static_cast<size_t>(x)]) survivors.push_back(x);
          std::vector<int> relabel(static_cast<size_t>(n) + 1, 0);
          for (size_t i = 0; i < survivors.size(); ++i)
            relabel[static_cast<size_t>(survivors[i])] = static_cast<int>(i) + 1;

          std::vector<std::vector<int>> surviving_edges;
          for (const auto& e : h.edges) {
            bool hits_y = false;
            for (int x : e)
              if (removed[static_cast<size_t>(x)]) { hits_y = true; break; }
            if (hits_y) continue;
            std::vector<int> mapped;
            mapped.reserve(e.size());
            for (int x : e) mapped.push_back(relabel[static_cast<size_t>(x)]);
            surviving_edges.push_back(std::move(mapped));
          }
          const Hypergraph sub(static_cast<int>(survivors.size()), std::move(surviving_edges));
          const auto coloring = is_m_colorable(sub, m);
          if (!coloring) return true;
          out.m = m;
          out.defect = ysize;
          for (size_t i : idx) out.witness_removed.push_back(static_cast<int>(i) + 1);
          out.witness_coloring = *coloring;
          return false;
        });
    if (found) return out;
  }
  fail(Errc::SearchExhausted, "defect search failed; removing everything is always colorable");
}

DenseGraph kneser_graph_of(const Hypergraph& h) {
  if (h.edges.size() > 200) fail(Errc::ParameterRange, "at most 200 hyperedges");
  DenseGraph g(static_cast<int>(h.edges.size()));
  for (size_t u = 0; u < h.edges.size(); ++u)
    for (size_t v = u + 1; v < h.edges.size(); ++v) {
      const auto& a = h.edges[u];
      const auto& b = h.edges[v];
      bool disjoint = true;
      size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) { disjoint = false; break; }
        if (a[i] < b[j]) ++i;
        else ++j;
      }
      if (disjoint) g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
  return g;
}

DolnikovReport check_dolnikov(const Hypergraph& h) {
  DolnikovReport report;
  report.chi = chromatic_number_exact(kneser_graph_of(h));
  report.cd2 = colorability_defect(h, 2).defect;
  report.holds = report.chi >= report.cd2;
  return report;
}

std::optional<Hyperplane> transversal_hyperplane_exists(
    const std::vector<std::vector<std::vector<Point>>>& families, int dimension) {
  if (dimension < 1 || dimension > 2)
    fail(Errc::ParameterRange, "transversal search supports d in {1,2}");

  size_t total_points = 0;
  std::vector<Point> union_points;
  for (const auto& family : families) {
    for (const auto& member : family) {
      if (member.empty() || member.size() > 4)
        fail(Errc::ParameterRange, "members must have 1..4 points");
      for (const auto& p : member) {
        if (p.dim() != dimension) fail(Errc::DimensionMismatch, "mixed point dimensions");
        union_points.push_back(p);
      }
      total_points += member.size();
    }
  }
  if (total_points > 20) fail(Errc::ParameterRange, "at most 20 points in total");

  for (size_t f = 0; f < families.size(); ++f) {
    const auto& family = families[f];
    for (size_t i = 0; i < family.size(); ++i)
      for (size_t j = i + 1; j < family.size(); ++j)
        if (!convex_hulls_intersect(family[i], family[j]))
          fail(Errc::NotIntersectingFamily,
               "family " + std::to_string(f + 1) + " has two disjoint member hulls");
  }

  // A hyperplane meets a hull iff the member's points do not lie strictly
  // on one open side.
  const auto meets_all = [&](const Hyperplane& h) {
    for (const auto& family : families)
      for (const auto& member : family) {
        bool has_nonpos = false, has_nonneg = false;
        for (const auto& p : member) {
          const int s = sign_of(h.evaluate(p));
          if (s <= 0) has_nonpos = true;
          if (s >= 0) has_nonneg = true;
        }
        if (!(has_nonpos && has_nonneg)) return false;
      }
    return true;
  };

  // Candidates: hyperplanes spanned by d union points, plus axis-direction
  // completions through single points (covers pencils and tiny unions). If
  // a transversal exists, sliding and pivoting it onto hull vertices lands
  // inside this set.
  std::set<Hyperplane> candidates;
  std::sort(union_points.begin(), union_points.end());
  union_points.erase(std::unique(union_points.begin(), union_points.end()), union_points.end());

  if (dimension == 1) {
    for (const auto& p : union_points) {
      Hyperplane h;
      h.normal = {Rational(1)};
      h.offset = p[0];
      h.canonicalize();
      candidates.insert(h);
    }
  } else {
    for (size_t i = 0; i < union_points.size(); ++i)
      for (size_t j = i + 1; j < union_points.size(); ++j) {
        const std::vector<Point> span{union_points[i], union_points[j]};
        if (!is_affinely_independent(span)) continue;
        candidates.insert(hyperplane_through(span));
      }
    for (const auto& p : union_points)
      for (int axis = 0; axis < 2; ++axis) {
        Point q = p;
        q.coords[static_cast<size_t>(axis)] += 1;
        candidates.insert(hyperplane_through({p, q}));
      }
  }

  for (const auto& h : candidates)
    if (meets_all(h)) return h;
  return std::nullopt;
}

}  // namespace topocut
