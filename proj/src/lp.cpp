#include "topocut/lp.hpp"

#include <cassert>

#include "topocut/error.hpp"

namespace topocut {

namespace {

// Reduces [a|b] to row echelon form in place; returns the pivot row count,
// or nullopt when the system is inconsistent.
std::optional<size_t> echelonize(Matrix& a, std::vector<Rational>& b) {
  const size_t rows = a.size();
  const size_t cols = rows == 0 ? 0 : a[0].size();
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t pivot = r;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    std::swap(b[pivot], b[r]);
    const Rational inv = Rational(1) / a[r][col];
    for (size_t row = 0; row < rows; ++row) {
      if (row == r || a[row][col] == 0) continue;
      const Rational factor = a[row][col] * inv;
      for (size_t j = col; j < cols; ++j) a[row][j] -= factor * a[r][j];
      b[row] -= factor * b[r];
    }
    ++r;
  }
  for (size_t row = r; row < rows; ++row)
    if (b[row] != 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Rational> lp_max_bounded(const Matrix& a,
                                       const std::vector<Rational>& b,
                                       const std::vector<Rational>& c) {
  Matrix e = a;
  std::vector<Rational> f = b;
  const auto pivots = echelonize(e, f);
  if (!pivots) return std::nullopt;
  const size_t r = *pivots;
  const size_t cols = a.empty() ? c.size() : a[0].size();
  e.resize(r);
  f.resize(r);

  if (r == 0) return Rational(0);  // only x = 0 matters for a bounded region

  // Every vertex of {x >= 0 : Ax = b} is a basic solution for some size-r
  // independent column set; a bounded nonempty polytope attains its optimum
  // at a vertex.
  std::optional<Rational> best;
  std::vector<size_t> pick(r);
  Matrix sub(r, std::vector<Rational>(r));

  const auto consider = [&]() {
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j) sub[i][j] = e[i][pick[j]];
    const auto solution = solve_square(sub, f);
    if (!solution) return;
    Rational objective = 0;
    for (size_t j = 0; j < r; ++j) {
      if ((*solution)[j] < 0) return;
      objective += c[pick[j]] * (*solution)[j];
    }
    if (!best || objective > *best) best = objective;
  };

  // Iterates over all size-r subsets of columns.
  for (size_t i = 0; i < r; ++i) pick[i] = i;
  if (r > cols) return std::nullopt;
  while (true) {
    consider();
    size_t i = r;
    bool done = true;
    while (i > 0) {
      --i;
      if (pick[i] != i + cols - r) {
        done = false;
        break;
      }
    }
    if (done) break;
    ++pick[i];
    for (size_t j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

bool convex_hulls_intersect(const std::vector<Point>& a, const std::vector<Point>& b) {
  if (a.empty() || b.empty()) return false;
  const int d = a[0].dim();
  for (const auto& p : a)
    if (p.dim() != d) fail(Errc::DimensionMismatch, "mixed point dimensions");
  for (const auto& p : b)
    if (p.dim() != d) fail(Errc::DimensionMismatch, "mixed point dimensions");

  const size_t na = a.size(), nb = b.size();
  const size_t cols = na + nb;
  const size_t rows = static_cast<size_t>(d) + 2;
  Matrix m(rows, std::vector<Rational>(cols, Rational(0)));
  std::vector<Rational> rhs(rows, Rational(0));
  for (int i = 0; i < d; ++i) {
    for (size_t j = 0; j < na; ++j) m[static_cast<size_t>(i)][j] = a[j][i];
    for (size_t j = 0; j < nb; ++j) m[static_cast<size_t>(i)][na + j] = -b[j][i];
  }
  for (size_t j = 0; j < na; ++j) m[static_cast<size_t>(d)][j] = 1;
  rhs[static_cast<size_t>(d)] = 1;
  for (size_t j = 0; j < nb; ++j) m[static_cast<size_t>(d) + 1][na + j] = 1;
  rhs[static_cast<size_t>(d) + 1] = 1;

  const std::vector<Rational> zero(cols, Rational(0));
  return lp_max_bounded(m, rhs, zero).has_value();
}

bool relative_interiors_intersect(const std::vector<Point>& a, const std::vector<Point>& b) {
  if (a.empty() || b.empty()) return false;
  const int d = a[0].dim();
  const size_t na = a.size(), nb = b.size();
  // Substituting lambda_i = t + u_i, mu_j = t + v_j turns the open
  // (all-positive-weights) condition into: maximize t subject to u, v, t >= 0.
  const size_t cols = na + nb + 1;
  const size_t rows = static_cast<size_t>(d) + 2;
  Matrix m(rows, std::vector<Rational>(cols, Rational(0)));
  std::vector<Rational> rhs(rows, Rational(0));
  for (int i = 0; i < d; ++i) {
    Rational t_coeff = 0;
    for (size_t j = 0; j < na; ++j) {
      m[static_cast<size_t>(i)][j] = a[j][i];
      t_coeff += a[j][i];
    }
    for (size_t j = 0; j < nb; ++j) {
      m[static_cast<size_t>(i)][na + j] = -b[j][i];
      t_coeff -= b[j][i];
    }
    m[static_cast<size_t>(i)][na + nb] = t_coeff;
  }
  for (size_t j = 0; j < na; ++j) m[static_cast<size_t>(d)][j] = 1;
  m[static_cast<size_t>(d)][na + nb] = Rational(static_cast<int>(na));
  rhs[static_cast<size_t>(d)] = 1;
  for (size_t j = 0; j < nb; ++j) m[static_cast<size_t>(d) + 1][na + j] = 1;
  m[static_cast<size_t>(d) + 1][na + nb] = Rational(static_cast<int>(nb));
  rhs[static_cast<size_t>(d) + 1] = 1;

  std::vector<Rational> objective(cols, Rational(0));
  objective[na + nb] = 1;
  const auto best = lp_max_bounded(m, rhs, objective);
  return best.has_value() && *best > 0;
}

}  // namespace topocut
