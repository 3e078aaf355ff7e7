#pragma once

#include <vector>

#include "spinorb/rational.hpp"

namespace spinorb {

using Matrix = std::vector<std::vector<Rational>>;

Matrix zero_matrix(int rows, int cols);
Matrix identity_matrix(int n);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scaled(const Matrix& a, const Rational& k);
bool is_zero(const Matrix& a);
// Rank by exact fraction-based Gaussian elimination.
int rank(Matrix a);

}  // namespace spinorb
