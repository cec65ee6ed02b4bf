#include "topocut/predicates.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "topocut/detail/combinatorics.hpp"
#include "topocut/error.hpp"
#include "topocut/linalg.hpp"

namespace topocut {

Rational Hyperplane::evaluate(const Point& p) const {
  if (p.dim() != dim())
    fail(Errc::DimensionMismatch, "point/hyperplane dimension disagree");
  Rational value = -offset;
  for (int i = 0; i < dim(); ++i) value += normal[static_cast<size_t>(i)] * p[i];
  return value;
}

Side Hyperplane::side_of(const Point& p) const {
  const int s = sign_of(evaluate(p));
  if (s < 0) return Side::PositiveOpen;
  if (s > 0) return Side::NegativeOpen;
  return Side::On;
}

void Hyperplane::canonicalize() {
  // Scale by the lcm of denominators, divide by the gcd of numerators, then
  // fix the sign of the first nonzero normal entry.
  Integer lcm_den = 1;
  for (const auto& c : normal) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
  lcm_den = boost::multiprecision::lcm(lcm_den, denominator(offset));
  Integer gcd_num = 0;
  auto fold = [&](const Rational& c) {
    const Integer scaled = numerator(c) * (lcm_den / denominator(c));
    gcd_num = boost::multiprecision::gcd(gcd_num, scaled);
  };
  for (const auto& c : normal) fold(c);
  fold(offset);
  if (gcd_num == 0) gcd_num = 1;

  const Rational scale(lcm_den, gcd_num);
  for (auto& c : normal) c *= scale;
  offset *= scale;
  for (const auto& c : normal) {
    const int s = sign_of(c);
    if (s == 0) continue;
    if (s < 0) {
      for (auto& e : normal) e = -e;
      offset = -offset;
    }
    break;
  }
}

void ColoredPointSet::validate() const {
  for (const auto& cls : classes)
    for (const auto& p : cls)
      if (p.dim() != dimension)
        fail(Errc::DimensionMismatch, "point dimension differs from ambient dimension");
}

int orientation(const std::vector<Point>& points) {
  if (points.empty()) fail(Errc::DimensionMismatch, "orientation of empty point list");
  const int d = points[0].dim();
  if (static_cast<int>(points.size()) != d + 1)
    fail(Errc::DimensionMismatch, "orientation needs exactly d+1 points in R^d");
  for (const auto& p : points)
    if (p.dim() != d) fail(Errc::DimensionMismatch, "mixed point dimensions");
  Matrix m(static_cast<size_t>(d), std::vector<Rational>(static_cast<size_t>(d)));
  for (int i = 1; i <= d; ++i)
    for (int j = 0; j < d; ++j)
      m[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] = points[static_cast<size_t>(i)][j] - points[0][j];
  return sign_of(determinant(m));
}

bool is_affinely_independent(const std::vector<Point>& points) {
  if (points.empty()) fail(Errc::DimensionMismatch, "empty point list");
  const int d = points[0].dim();
  for (const auto& p : points)
    if (p.dim() != d) fail(Errc::DimensionMismatch, "mixed point dimensions");
  const int k = static_cast<int>(points.size()) - 1;
  if (k == 0) return true;
  if (k > d) return false;
  Matrix diff(static_cast<size_t>(k), std::vector<Rational>(static_cast<size_t>(d)));
  for (int i = 1; i <= k; ++i)
    for (int j = 0; j < d; ++j)
      diff[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] = points[static_cast<size_t>(i)][j] - points[0][j];
  return rank(std::move(diff)) == k;
}

bool is_general_position(const std::vector<Point>& points, int dimension) {
  for (const auto& p : points)
    if (p.dim() != dimension) fail(Errc::DimensionMismatch, "mixed point dimensions");
  {
    std::vector<Point> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  }
  // Difference matrices are built in place: the subset count is O(n^(d+1))
  // and point copies would dominate the actual determinants.
  const size_t k = static_cast<size_t>(dimension) + 1;
  const size_t d = static_cast<size_t>(dimension);
  Matrix diff(d, std::vector<Rational>(d));
  return detail::for_each_subset(points.size(), k, [&](const std::vector<size_t>& idx) {
    const Point& base = points[idx[0]];
    for (size_t i = 1; i < k; ++i)
      for (size_t j = 0; j < d; ++j)
        diff[i - 1][j] = points[idx[i]][static_cast<int>(j)] - base[static_cast<int>(j)];
    return determinant(diff) != 0;
  });
}

bool is_general_position(const ColoredPointSet& ps) {
  ps.validate();
  return is_general_position(ps.all_points(), ps.dimension);
}

Hyperplane hyperplane_through(const std::vector<Point>& points) {
  if (points.empty()) fail(Errc::DimensionMismatch, "no points given");
  const int d = points[0].dim();
  if (static_cast<int>(points.size()) != d)
    fail(Errc::DimensionMismatch, "hyperplane_through needs exactly d points in R^d");
  for (const auto& p : points)
    if (p.dim() != d) fail(Errc::DimensionMismatch, "mixed point dimensions");

  // Kernel of the d x (d+1) system [p_i | -1] * (normal, offset) = 0.
  Matrix m(static_cast<size_t>(d), std::vector<Rational>(static_cast<size_t>(d) + 1));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = points[static_cast<size_t>(i)][j];
    m[static_cast<size_t>(i)][static_cast<size_t>(d)] = Rational(-1);
  }
  std::vector<Rational> v = kernel_cofactors(m);
  Hyperplane h;
  h.normal.assign(v.begin(), v.begin() + d);
  h.offset = v[static_cast<size_t>(d)];
  bool normal_zero = true;
  for (const auto& c : h.normal)
    if (c != 0) { normal_zero = false; break; }
  if (normal_zero) fail(Errc::DegenerateSpan, "points are affinely dependent");
  h.canonicalize();
  return h;
}

Point moment_curve_point(const Rational& t, int d) {
  if (d < 1) fail(Errc::ParameterRange, "moment curve needs d >= 1");
  Point p;
  p.coords.resize(static_cast<size_t>(d));
  Rational power = t;
  for (int i = 0; i < d; ++i) {
    p.coords[static_cast<size_t>(i)] = power;
    if (i + 1 < d) power *= t;
  }
  return p;
}

}  // namespace topocut
