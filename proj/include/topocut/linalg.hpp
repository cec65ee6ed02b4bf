#pragma once

#include <optional>
#include <vector>

#include "topocut/rational.hpp"

namespace topocut {

using Matrix = std::vector<std::vector<Rational>>;

// Exact determinant; division-free cofactor expansion up to 4x4, Gaussian
// elimination beyond. Square input.
Rational determinant(const Matrix& m);

// Exact row rank.
int rank(Matrix m);

// Solves the square system a*x = b exactly; nullopt when a is singular.
std::optional<std::vector<Rational>> solve_square(Matrix a, std::vector<Rational> b);

// Given a k x (k+1) matrix of full row rank, returns a kernel vector via
// signed maximal-minor cofactors: v[j] = (-1)^j * det(drop column j).
// Returns the zero vector when the rows are dependent.
std::vector<Rational> kernel_cofactors(const Matrix& m);

}  // namespace topocut
