#include "topocut/linalg.hpp"

#include <cassert>
#include <utility>

namespace topocut {

namespace {

// Division-free cofactor expansions for the sizes the solvers live in;
// avoids the gcd churn of rational pivoting on integer inputs.
Rational det2(const Matrix& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

Rational det3(const Matrix& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Rational det4(const Matrix& m) {
  Rational total = 0;
  Matrix minor(3, std::vector<Rational>(3));
  for (size_t j = 0; j < 4; ++j) {
    if (m[0][j] == 0) continue;
    for (size_t r = 1; r < 4; ++r) {
      size_t out = 0;
      for (size_t c = 0; c < 4; ++c) {
        if (c == j) continue;
        minor[r - 1][out++] = m[r][c];
      }
    }
    const Rational term = m[0][j] * det3(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace

Rational determinant(const Matrix& input) {
  const size_t n = input.size();
  if (n == 0) return Rational(1);
  if (n == 1) return input[0][0];
  if (n == 2) return det2(input);
  if (n == 3) return det3(input);
  if (n == 4) return det4(input);
  Matrix m = input;
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = Rational(1) / m[col][col];
    for (size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      const Rational factor = m[row][col] * inv;
      for (size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
    }
  }
  return det;
}

int rank(Matrix m) {
  if (m.empty()) return 0;
  const size_t rows = m.size();
  const size_t cols = m[0].size();
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t pivot = r;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    const Rational inv = Rational(1) / m[r][col];
    for (size_t row = r + 1; row < rows; ++row) {
      if (m[row][col] == 0) continue;
      const Rational factor = m[row][col] * inv;
      for (size_t j = col; j < cols; ++j) m[row][j] -= factor * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

std::optional<std::vector<Rational>> solve_square(Matrix a, std::vector<Rational> b) {
  const size_t n = a.size();
  assert(b.size() == n);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col] * inv;
      for (size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::vector<Rational> kernel_cofactors(const Matrix& m) {
  const size_t k = m.size();
  assert(!m.empty() && m[0].size() == k + 1);
  std::vector<Rational> v(k + 1);
  Matrix minor(k, std::vector<Rational>(k));
  for (size_t drop = 0; drop <= k; ++drop) {
    for (size_t i = 0; i < k; ++i) {
      size_t out = 0;
      for (size_t j = 0; j <= k; ++j) {
        if (j == drop) continue;
        minor[i][out++] = m[i][j];
      }
    }
    const Rational d = determinant(minor);
    v[drop] = (drop % 2 == 0) ? d : -d;
  }
  return v;
}

}  // namespace topocut
