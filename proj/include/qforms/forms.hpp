#pragma once

#include <map>
#include <set>
#include <utility>

#include "qforms/hilbert.hpp"
#include "qforms/matrix.hpp"

namespace qforms {

// Rational quadratic form q(x) = x^T G x with symmetric Gram matrix G.
// The cross-coefficient c_ij of the polynomial maps to G_ij = c_ij / 2.
class QForm {
public:
    explicit QForm(Matrix gram) : gram_(std::move(gram)) {
        const std::size_t n = gram_.size();
        if (n == 0) throw std::domain_error("empty Gram matrix");
        for (const auto& row : gram_)
            if (row.size() != n) throw std::domain_error("Gram matrix not square");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (gram_[i][j] != gram_[j][i])
                    throw std::domain_error("Gram matrix not symmetric");
    }

    static QForm diagonal(Vec entries) {
        Matrix g(entries.size(), Vec(entries.size(), 0));
        for (std::size_t i = 0; i < entries.size(); ++i) g[i][i] = entries[i];
        return QForm(std::move(g));
    }

    static QForm identity(int n) { return diagonal(Vec(n, 1)); }

    int dim() const { return static_cast<int>(gram_.size()); }
    const Matrix& gram() const { return gram_; }
    const Rational& at(int i, int j) const { return gram_[i][j]; }

    Rational evaluate(const Vec& x) const {
        if (static_cast<int>(x.size()) != dim())
            throw std::domain_error("point dimension mismatch");
        Rational acc = 0;
        for (int i = 0; i < dim(); ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < dim(); ++j) acc += x[i] * gram_[i][j] * x[j];
        }
        return acc;
    }

    // q(Tx): Gram matrix T^T G T.
    QForm conjugated(const Matrix& t) const {
        return QForm(mat_mul(transpose(t), mat_mul(gram_, t)));
    }

    // Every leading principal minor positive, computed exactly. Returns the
    // index (1-based size) of the first failing minor, or 0 when definite.
    int first_nonpositive_minor() const {
        for (int k = 1; k <= dim(); ++k) {
            Matrix sub(k, Vec(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i][j] = gram_[i][j];
            if (determinant(std::move(sub)) <= 0) return k;
        }
        return 0;
    }

    bool is_positive_definite() const { return first_nonpositive_minor() == 0; }

    bool operator==(const QForm& o) const { return gram_ == o.gram_; }
    bool operator!=(const QForm& o) const { return !(*this == o); }

private:
    Matrix gram_;
};

// Simplex form S_k = sum_{i <= j} x_i x_j: Gram 1 on the diagonal, 1/2 off.
inline QForm simplex_form(int k) {
    if (k < 1) throw std::domain_error("simplex_form requires k >= 1");
    Matrix g(k, Vec(k, Rational(1, 2)));
    for (int i = 0; i < k; ++i) g[i][i] = 1;
    return QForm(std::move(g));
}

// (1/d) I_n: the distance-sqrt(d) Euclidean graph form.
inline QForm scaled_identity(int n, const Rational& d) {
    if (n < 1 || d <= 0)
        throw std::domain_error("scaled_identity requires n >= 1, d > 0");
    return QForm::diagonal(Vec(n, 1 / d));
}

// Exact congruence witness: transform^T gram transform = diag(entries).
struct DiagonalForm {
    Vec entries;
    Matrix transform;
};

// Symmetric Gaussian elimination over Q. When a pivot is zero, a row/column
// with a nonzero coupling is added in first (valid in characteristic != 2).
inline DiagonalForm diagonalize(const QForm& q) {
    const int n = q.dim();
    Matrix g = q.gram();
    Matrix t = identity_matrix(n);

    // Congruence column operation col_j += c * col_i, mirrored on rows.
    const auto add_col = [&](int j, int i, const Rational& c) {
        for (int r = 0; r < n; ++r) g[r][j] += c * g[r][i];
        for (int r = 0; r < n; ++r) g[j][r] += c * g[i][r];
        for (int r = 0; r < n; ++r) t[r][j] += c * t[r][i];
    };

    for (int i = 0; i < n; ++i) {
        if (g[i][i] == 0) {
            int j = i + 1;
            while (j < n && g[i][j] == 0) ++j;
            if (j == n) throw std::domain_error("singular Gram matrix");
            if (g[j][j] != 0) {
                for (int r = 0; r < n; ++r) std::swap(g[r][i], g[r][j]);
                for (int r = 0; r < n; ++r) std::swap(g[i][r], g[j][r]);
                for (int r = 0; r < n; ++r) std::swap(t[r][i], t[r][j]);
            } else {
                add_col(i, j, 1);  // now g[i][i] = 2 g[i][j] != 0
            }
        }
        for (int j = i + 1; j < n; ++j) {
            if (g[i][j] == 0) continue;
            add_col(j, i, -g[i][j] / g[i][i]);
        }
    }

    Vec entries(n);
    for (int i = 0; i < n; ++i) {
        if (g[i][i] == 0) throw std::domain_error("singular Gram matrix");
        entries[i] = g[i][i];
    }
    return {std::move(entries), std::move(t)};
}

// Complete rational equivalence invariant: dimension, determinant square
// class D, signature, and the Hasse map E_v over its finite support.
struct FormInvariants {
    int dim = 0;
    Int det_class = 1;          // signed squarefree
    std::pair<int, int> signature{0, 0};
    std::map<Place, int> hasse;  // support places only; +1 implied elsewhere

    int hasse_at(const Place& v) const {
        const auto it = hasse.find(v);
        return it == hasse.end() ? 1 : it->second;
    }
};

inline bool operator==(const FormInvariants& a, const FormInvariants& b) {
    if (a.dim != b.dim || a.det_class != b.det_class || a.signature != b.signature)
        return false;
    std::set<Place> support;
    for (const auto& [v, e] : a.hasse) support.insert(v);
    for (const auto& [v, e] : b.hasse) support.insert(v);
    for (const Place& v : support)
        if (a.hasse_at(v) != b.hasse_at(v)) return false;
    return true;
}

inline bool operator!=(const FormInvariants& a, const FormInvariants& b) {
    return !(a == b);
}

namespace detail {

// Support for the Hasse product over diagonal entries: {inf, 2} and the
// odd primes of the entries' square classes.
inline std::set<Place> hasse_support(const Vec& entries) {
    std::set<Place> s{Place::infinity(), Place::at(2)};
    for (const Rational& a : entries)
        for (const auto& [p, e] : factorize(abs(square_class(a))))
            if (p != 2) s.insert(Place::at(p));
    return s;
}

}  // namespace detail

inline FormInvariants invariants(const QForm& q) {
    const DiagonalForm d = diagonalize(q);
    FormInvariants inv;
    inv.dim = q.dim();

    Rational det = 1;
    for (const Rational& a : d.entries) {
        det *= a;
        if (a > 0)
            ++inv.signature.first;
        else
            ++inv.signature.second;
    }
    inv.det_class = square_class(det);

    for (const Place& v : detail::hasse_support(d.entries)) {
        int e = 1;
        for (std::size_t i = 0; i < d.entries.size(); ++i)
            for (std::size_t j = i + 1; j < d.entries.size(); ++j)
                e *= hilbert(d.entries[i], d.entries[j], v);
        inv.hasse.emplace(v, e);
    }
    return inv;
}

// Rational equivalence via the complete invariant.
inline bool equivalent(const QForm& q1, const QForm& q2) {
    if (q1.dim() != q2.dim()) return false;
    return invariants(q1) == invariants(q2);
}

// lambda_k: the determinant square class of S_k.
inline Int lambda(int k) {
    return k % 2 == 0 ? Int(k + 1) : Int((k + 1) / 2);
}

// Closed-form invariants of S_k: D = lambda_k, E_v = (k+1, lambda_{k-1})_v.
inline FormInvariants s_k_invariants(int k) {
    if (k < 1) throw std::domain_error("s_k_invariants requires k >= 1");
    FormInvariants inv;
    inv.dim = k;
    inv.det_class = square_class(Rational(lambda(k)));
    inv.signature = {k, 0};
    const Rational a(k + 1);
    const Rational b(k % 2 == 0 ? -2 : -1);
    for (const Place& v : hilbert_support(a, b)) inv.hasse.emplace(v, hilbert(a, b, v));
    return inv;
}

}  // namespace qforms
