#pragma once

#include <vector>

#include "qforms/rational.hpp"

namespace qforms {

using Vec = std::vector<Rational>;
using Matrix = std::vector<Vec>;

inline Matrix identity_matrix(int n) {
    Matrix m(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Matrix transpose(const Matrix& a) {
    if (a.empty()) return {};
    Matrix t(a[0].size(), Vec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Matrix c(n, Vec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

inline Rational determinant(Matrix a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

}  // namespace qforms
