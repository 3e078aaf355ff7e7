#include "spinorb/linalg.hpp"

namespace spinorb {

Matrix zero_matrix(int rows, int cols) { return Matrix(rows, std::vector<Rational>(cols)); }

Matrix identity_matrix(int n) {
    Matrix m = zero_matrix(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = Rational(1);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    int n = static_cast<int>(a.size()), k = static_cast<int>(b.size()), m = b.empty() ? 0 : static_cast<int>(b[0].size());
    Matrix c = zero_matrix(n, m);
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (int j = 0; j < m; ++j)
                if (!b[t][j].is_zero()) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] -= b[i][j];
    return c;
}

Matrix scaled(const Matrix& a, const Rational& k) {
    Matrix c = a;
    for (auto& row : c)
        for (auto& x : row) x *= k;
    return c;
}

bool is_zero(const Matrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

int rank(Matrix a) {
    int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        for (int i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            Rational f = a[i][c] / a[r][c];
            for (int j = c; j < cols; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace spinorb
