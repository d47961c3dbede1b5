#pragma once

#include <optional>
#include <vector>

#include "qforms/geometry.hpp"
#include "qforms/graphinv.hpp"

namespace qforms {
namespace oracle {

struct SearchBounds {
    long denominator_bound = 1;  // L: points live in (1/L) Z^n
    long height_bound = 1;       // H: |numerator over L| of each coordinate
    long max_candidates = 100000;
};

// All x in (1/L) Z^n with coordinate numerators bounded by H and q(x) = 1,
// in lexicographic order, capped at max_candidates. Sound but only complete
// within the bounds.
inline std::vector<Vec> search_unit_vectors(const QForm& q, const SearchBounds& b) {
    if (!q.is_positive_definite())
        throw std::domain_error("form is not positive definite");
    const int n = q.dim();
    const long L = b.denominator_bound, H = b.height_bound;

    // Scale to integers: q(k/L) = 1 iff k^T (c G) k = c L^2 with c the
    // common denominator of the Gram entries.
    Int c = 1;
    for (const auto& row : q.gram())
        for (const Rational& e : row) c = lcm(c, e.get_den());
    std::vector<std::vector<Int>> z(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational s = q.at(i, j) * c;
            z[i][j] = s.get_num();
        }
    const Int target = c * L * L;

    std::vector<Vec> found;
    std::vector<long> k(n, -H);
    while (true) {
        Int acc = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) acc += z[i][j] * k[i] * k[j];
        if (acc == target) {
            Vec x(n);
            for (int i = 0; i < n; ++i) {
                x[i] = Rational(k[i], L);
                x[i].canonicalize();
            }
            found.push_back(std::move(x));
            if (static_cast<long>(found.size()) >= b.max_candidates) break;
        }
        int i = n - 1;
        while (i >= 0 && k[i] == H) k[i--] = -H;
        if (i < 0) break;
        ++k[i];
    }
    return found;
}

// Greedy backtracking clique search over the unit-vector compatibility
// graph. A returned set is an exact c-clique including the origin; absence
// at the given bounds proves nothing.
inline std::optional<PointSet> search_clique(const QForm& q, int c,
                                             const SearchBounds& b) {
    if (c < 2) throw std::domain_error("clique size must be >= 2");
    const std::vector<Vec> units = search_unit_vectors(q, b);
    const int m = static_cast<int>(units.size());
    if (m == 0) return std::nullopt;

    std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            adj[i][j] = adj[j][i] =
                q.evaluate(detail::sub(units[i], units[j])) == 1;
        }

    std::vector<int> chosen;
    const auto extend = [&](auto&& self, int start) -> bool {
        if (static_cast<int>(chosen.size()) == c - 1) return true;
        for (int i = start; i < m; ++i) {
            bool ok = true;
            for (int j : chosen)
                if (!adj[j][i]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(i);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!extend(extend, 0)) return std::nullopt;

    PointSet ps;
    ps.dim = q.dim();
    ps.points.push_back(Vec(q.dim(), 0));
    for (int i : chosen) ps.points.push_back(units[i]);
    return ps;
}

// Hilbert symbol by brute force: sign rule at the real place; at finite p a
// search for a primitive solution of z^2 = a x^2 + b y^2 mod p^e with
// e = v_p(4ab) + 3, which is enough precision for Hensel lifting.
inline int brute_hilbert(const Rational& a, const Rational& b, const Place& v) {
    if (a == 0 || b == 0) throw std::domain_error("hilbert symbol of zero");
    if (v.is_real()) return (a < 0 && b < 0) ? -1 : 1;

    const Int& p = v.prime();
    // Multiplying by squares does not change the symbol: clear denominators.
    Int ia = a.get_num() * a.get_den();
    Int ib = b.get_num() * b.get_den();

    Int fourab = 4 * abs(ia * ib);
    unsigned long e = 3;
    while (mpz_divisible_p(fourab.get_mpz_t(), p.get_mpz_t())) {
        fourab /= p;
        ++e;
    }
    Int mod = 1;
    for (unsigned long i = 0; i < e; ++i) mod *= p;
    const long M = mod.get_si();
    const long pl = p.get_si();
    const long ra = detail::mod_si(ia, M);
    const long rb = detail::mod_si(ib, M);

    // squares[w]: w = z^2 mod M for some z; unit_squares additionally needs
    // z coprime to p (the case where both x and y vanish mod p).
    std::vector<unsigned char> squares(M, 0), unit_squares(M, 0);
    for (long z = 0; z < M; ++z) {
        const long w = static_cast<long>((static_cast<unsigned long long>(z) * z) % M);
        squares[w] = 1;
        if (z % pl != 0) unit_squares[w] = 1;
    }
    std::vector<long> ax2(M), by2(M);
    for (long t = 0; t < M; ++t) {
        const unsigned long long tt = static_cast<unsigned long long>(t) * t % M;
        ax2[t] = static_cast<long>(tt * ra % M);
        by2[t] = static_cast<long>(tt * rb % M);
    }
    for (long x = 0; x < M; ++x)
        for (long y = 0; y < M; ++y) {
            long w = ax2[x] + by2[y];
            if (w >= M) w -= M;
            if (x % pl != 0 || y % pl != 0) {
                if (squares[w]) return 1;
            } else {
                if (unit_squares[w]) return 1;
            }
        }
    return -1;
}

// Rank over Q by fraction-free integer elimination (Bareiss), independent
// of the rational elimination used by the geometry verifier.
inline int exact_rank(const std::vector<Vec>& vectors) {
    if (vectors.empty()) return 0;
    const std::size_t cols = vectors[0].size();
    std::vector<std::vector<Int>> rows;
    for (const Vec& v : vectors) {
        Int d = 1;
        for (const Rational& e : v) d = lcm(d, e.get_den());
        std::vector<Int> row(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            Rational s = v[j] * d;
            row[j] = s.get_num();
        }
        rows.push_back(std::move(row));
    }

    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) / prev;
            rows[i][c] = 0;
        }
        prev = rows[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace oracle
}  // namespace qforms
