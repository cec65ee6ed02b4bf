#include "topocut/tucker.hpp"

#include <algorithm>
#include <set>

#include "topocut/error.hpp"
#include "topocut/lp.hpp"
#include "topocut/predicates.hpp"

namespace topocut {

namespace {

// All nonempty subsets of a sorted simplex, sorted.
void add_with_faces(std::set<std::vector<int>>& out, const std::vector<int>& simplex) {
  const size_t k = simplex.size();
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> face;
    for (size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) face.push_back(simplex[i]);
    out.insert(std::move(face));
  }
}

Point negated(const Point& p) {
  Point q = p;
  for (auto& c : q.coords) c = -c;
  return q;
}

// Vertices of (n-1)-simplices that belong to exactly one n-simplex. For a
// triangulated ball this is the triangulated boundary sphere.
std::set<int> combinatorial_boundary(const SymmetricTriangulation& t) {
  const size_t facet_size = static_cast<size_t>(t.n);
  const size_t cell_size = static_cast<size_t>(t.n) + 1;
  std::map<std::vector<int>, int> facet_use;
  for (const auto& s : t.simplices) {
    if (s.size() != cell_size) continue;
    for (size_t drop = 0; drop < cell_size; ++drop) {
      std::vector<int> facet;
      for (size_t i = 0; i < cell_size; ++i)
        if (i != drop) facet.push_back(s[i]);
      ++facet_use[facet];
    }
  }
  std::set<int> boundary;
  for (const auto& [facet, uses] : facet_use) {
    if (uses != 1 || facet.size() != facet_size) continue;
    for (int v : facet) boundary.insert(v);
  }
  return boundary;
}

}  // namespace

SymmetricTriangulation build_disk_triangulation(int n, int resolution) {
  if (n != 1 && n != 2) fail(Errc::ParameterRange, "only n in {1,2} is supported");
  if (resolution < 1) fail(Errc::ParameterRange, "resolution must be >= 1");

  SymmetricTriangulation t;
  t.n = n;
  std::set<std::vector<int>> faces;

  if (n == 1) {
    const int r = resolution;
    // Vertices -1 = x_0 < ... < x_{2r} = 1, equally spaced.
    for (int i = 0; i <= 2 * r; ++i)
      t.vertices.push_back(Point({Rational(i - r, r)}));
    for (int i = 0; i < 2 * r; ++i) add_with_faces(faces, {i, i + 1});
    t.boundary_antipode[0] = 2 * r;
    t.boundary_antipode[2 * r] = 0;
  } else {
    const int r = resolution;
    if (r < 2)
      fail(Errc::ParameterRange,
           "n = 2 needs resolution >= 2: two antipodal boundary vertices cannot "
           "triangulate the disk");
    // Boundary vertices 0..2r-1 counterclockwise on the rational unit
    // circle: the upper arc uses the tangent-half-angle parametrization
    // x = (1-u^2)/(1+u^2), y = 2u/(1+u^2) with u = j/(r-j), the lower arc
    // is its pointwise negation. Vertex 2r is the center.
    for (int j = 0; j < r; ++j) {
      const Rational u(j, r - j);
      const Rational den = 1 + u * u;
      t.vertices.push_back(Point({(1 - u * u) / den, (2 * u) / den}));
    }
    for (int j = 0; j < r; ++j) t.vertices.push_back(negated(t.vertices[static_cast<size_t>(j)]));
    t.vertices.push_back(Point({Rational(0), Rational(0)}));
    const int center = 2 * r;
    for (int j = 0; j < 2 * r; ++j) {
      std::vector<int> tri{center, j, (j + 1) % (2 * r)};
      std::sort(tri.begin(), tri.end());
      add_with_faces(faces, tri);
    }
    for (int j = 0; j < 2 * r; ++j) t.boundary_antipode[j] = (j + r) % (2 * r);
  }

  t.simplices.assign(faces.begin(), faces.end());
  return t;
}

bool validate_complex(const SymmetricTriangulation& t) {
  const int nv = static_cast<int>(t.vertices.size());
  if (t.simplices.empty()) return false;
  std::set<std::vector<int>> present(t.simplices.begin(), t.simplices.end());
  if (present.size() != t.simplices.size()) return false;

  for (const auto& s : t.simplices) {
    if (s.empty()) return false;
    for (int v : s)
      if (v < 0 || v >= nv) return false;
    if (!std::is_sorted(s.begin(), s.end())) return false;
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    // Faces must all be present.
    std::set<std::vector<int>> faces;
    add_with_faces(faces, s);
    for (const auto& f : faces)
      if (!present.count(f)) return false;
    // Geometric non-degeneracy.
    std::vector<Point> pts;
    for (int v : s) pts.push_back(t.vertices[static_cast<size_t>(v)]);
    for (const auto& p : pts)
      if (p.dim() != t.n) return false;
    if (!is_affinely_independent(pts)) return false;
  }

  // Distinct simplices must have disjoint relative interiors; together with
  // face closure this is equivalent to "every intersection of two simplices
  // is a common face".
  for (size_t i = 0; i < t.simplices.size(); ++i) {
    std::vector<Point> a;
    for (int v : t.simplices[i]) a.push_back(t.vertices[static_cast<size_t>(v)]);
    for (size_t j = i + 1; j < t.simplices.size(); ++j) {
      std::vector<Point> b;
      for (int v : t.simplices[j]) b.push_back(t.vertices[static_cast<size_t>(v)]);
      if (relative_interiors_intersect(a, b)) return false;
    }
  }

  // Boundary involution: fixed-point-free, negated coordinates, domain
  // exactly the combinatorial boundary.
  const std::set<int> boundary = combinatorial_boundary(t);
  for (const auto& [v, w] : t.boundary_antipode) {
    if (v < 0 || v >= nv || w < 0 || w >= nv) return false;
    if (v == w) return false;
    const auto partner = t.boundary_antipode.find(w);
    if (partner == t.boundary_antipode.end() || partner->second != v) return false;
    if (!(t.vertices[static_cast<size_t>(w)] == negated(t.vertices[static_cast<size_t>(v)])))
      return false;
  }
  std::set<int> domain;
  for (const auto& [v, w] : t.boundary_antipode) domain.insert(v);
  return domain == boundary;
}

namespace {

void check_labeling(const SymmetricTriangulation& t, const TuckerLabeling& lab) {
  const int nv = static_cast<int>(t.vertices.size());
  for (int v = 0; v < nv; ++v) {
    const auto it = lab.labels.find(v);
    if (it == lab.labels.end())
      fail(Errc::InvalidLabeling, "vertex " + std::to_string(v) + " has no label");
    const int a = it->second < 0 ? -it->second : it->second;
    if (a < 1 || a > t.n)
      fail(Errc::InvalidLabeling, "label out of range at vertex " + std::to_string(v));
  }
  for (const auto& [v, w] : t.boundary_antipode)
    if (lab.labels.at(v) != -lab.labels.at(w))
      fail(Errc::InvalidLabeling, "labeling is not antipodal on the boundary");
}

}  // namespace

std::optional<std::pair<int, int>> find_complementary_edge(const SymmetricTriangulation& t,
                                                           const TuckerLabeling& lab) {
  check_labeling(t, lab);
  for (const auto& s : t.simplices) {
    if (s.size() != 2) continue;
    if (lab.labels.at(s[0]) == -lab.labels.at(s[1])) return std::make_pair(s[0], s[1]);
  }
  return std::nullopt;
}

uint64_t count_labelings(const SymmetricTriangulation& t) {
  size_t free_choices = t.boundary_antipode.size() / 2;
  for (int v = 0; v < static_cast<int>(t.vertices.size()); ++v)
    if (!t.boundary_antipode.count(v)) ++free_choices;
  uint64_t total = 1;
  for (size_t i = 0; i < free_choices; ++i) total *= static_cast<uint64_t>(2 * t.n);
  return total;
}

void enumerate_labelings(const SymmetricTriangulation& t,
                         const std::function<bool(const TuckerLabeling&)>& fn) {
  if (count_labelings(t) > 1000000)
    fail(Errc::ParameterRange, "labeling space exceeds 10^6");

  // Free slots: the smaller vertex of each boundary pair, then interior
  // vertices; the partner of a pair always carries the negated label.
  std::vector<int> slots;
  std::vector<int> partner;
  const int nv = static_cast<int>(t.vertices.size());
  for (int v = 0; v < nv; ++v) {
    const auto it = t.boundary_antipode.find(v);
    if (it == t.boundary_antipode.end()) {
      slots.push_back(v);
      partner.push_back(-1);
    } else if (v < it->second) {
      slots.push_back(v);
      partner.push_back(it->second);
    }
  }

  // Label alphabet in canonical order +1,-1,...,+n,-n.
  std::vector<int> alphabet;
  for (int a = 1; a <= t.n; ++a) {
    alphabet.push_back(a);
    alphabet.push_back(-a);
  }

  std::vector<size_t> digit(slots.size(), 0);
  while (true) {
    TuckerLabeling lab;
    for (size_t i = 0; i < slots.size(); ++i) {
      const int value = alphabet[digit[i]];
      lab.labels[slots[i]] = value;
      if (partner[i] >= 0) lab.labels[partner[i]] = -value;
    }
    if (!fn(lab)) return;
    size_t i = slots.size();
    while (i > 0) {
      --i;
      if (++digit[i] < alphabet.size()) break;
      digit[i] = 0;
      if (i == 0) return;
    }
    if (slots.empty()) return;
  }
}

}  // namespace topocut
