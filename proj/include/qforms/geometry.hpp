#pragma once

#include <optional>

#include "qforms/forms.hpp"

namespace qforms {

struct PointSet {
    int dim = 0;
    std::vector<Vec> points;
};

// Exact rational square root: exists iff v >= 0 and square_class(v) = 1.
inline std::optional<Rational> rational_sqrt(const Rational& v) {
    if (v == 0) return Rational(0);
    if (v < 0 || square_class(v) != 1) return std::nullopt;
    Int num, den;
    mpz_sqrt(num.get_mpz_t(), v.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), v.get_den_mpz_t());
    return Rational(num, den);
}

namespace detail {

inline Vec sub(const Vec& a, const Vec& b) {
    Vec d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

// Rank over Q by plain fraction elimination.
inline int rank_of(std::vector<Vec> rows) {
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace detail

// Gram matrix of the vectors under the inner product induced by q:
// M_ij = (q(v_i) + q(v_j) - q(v_i - v_j)) / 2. For linearly independent
// vectors the resulting form is rationally equivalent to q.
inline Matrix gram_from_points(const PointSet& ps, const QForm& q) {
    if (ps.dim != q.dim()) throw std::domain_error("dimension mismatch");
    const std::size_t m = ps.points.size();
    Matrix g(m, Vec(m, 0));
    Vec norms(m);
    for (std::size_t i = 0; i < m; ++i) norms[i] = q.evaluate(ps.points[i]);
    for (std::size_t i = 0; i < m; ++i) {
        g[i][i] = norms[i];
        for (std::size_t j = i + 1; j < m; ++j) {
            g[i][j] = (norms[i] + norms[j] -
                       q.evaluate(detail::sub(ps.points[i], ps.points[j]))) /
                      2;
            g[j][i] = g[i][j];
        }
    }
    return g;
}

// The published all-rational-sides simplex in Q^n: pairs (..,1,+-1,..) on
// consecutive coordinate blocks, the point (1, 1/15, 0, ...), and for odd n
// an extra point ending in 7/4. Reproduced verbatim, not repaired: for even
// n the last point is affinely dependent on the first two.
inline PointSet beckman_quarles_simplex(int n) {
    if (n < 2) throw std::domain_error("simplex requires n >= 2");
    PointSet ps;
    ps.dim = n;
    for (int b = 0; b + 1 < n || (n % 2 == 0 && b < n); b += 2) {
        Vec up(n, 0), down(n, 0);
        up[b] = 1;
        up[b + 1] = 1;
        down[b] = 1;
        down[b + 1] = -1;
        ps.points.push_back(std::move(up));
        ps.points.push_back(std::move(down));
    }
    Vec odd_one(n, 0);
    odd_one[0] = 1;
    odd_one[1] = Rational(1, 15);
    ps.points.push_back(std::move(odd_one));
    if (n % 2 != 0) {
        Vec last(n, 0);
        last[n - 1] = Rational(7, 4);
        ps.points.push_back(std::move(last));
    }
    return ps;
}

// Triangle (0,0), (n-1,2), (-n+1,2) with sides n+1, n+1, 2n-2 under the
// form x^2 + n y^2.
inline PointSet rational_triangle(int n) {
    if (n < 2) throw std::domain_error("rational_triangle requires n >= 2");
    PointSet ps;
    ps.dim = 2;
    ps.points = {{Rational(0), Rational(0)},
                 {Rational(n - 1), Rational(2)},
                 {Rational(-n + 1), Rational(2)}};
    return ps;
}

struct DistanceReport {
    bool all_rational = false;
    std::vector<std::vector<std::optional<Rational>>> side_lengths;
    bool affinely_independent = false;
    int rank = 0;
};

// Exact pairwise q-distances (lengths where the squared distance is a
// rational square) and affine independence of the point set.
inline DistanceReport verify_distances(const PointSet& ps, const QForm& q) {
    if (ps.dim != q.dim()) throw std::domain_error("dimension mismatch");
    const std::size_t m = ps.points.size();
    DistanceReport rep;
    rep.all_rational = true;
    rep.side_lengths.assign(m, std::vector<std::optional<Rational>>(m));
    for (std::size_t i = 0; i < m; ++i) {
        rep.side_lengths[i][i] = Rational(0);
        for (std::size_t j = i + 1; j < m; ++j) {
            const Rational d2 = q.evaluate(detail::sub(ps.points[i], ps.points[j]));
            const auto len = rational_sqrt(d2);
            if (!len) rep.all_rational = false;
            rep.side_lengths[i][j] = len;
            rep.side_lengths[j][i] = len;
        }
    }
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < m; ++i)
        diffs.push_back(detail::sub(ps.points[i], ps.points[0]));
    rep.rank = detail::rank_of(std::move(diffs));
    rep.affinely_independent = m > 0 && rep.rank == static_cast<int>(m) - 1;
    return rep;
}

}  // namespace qforms
