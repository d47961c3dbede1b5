#pragma once

#include <cassert>
#include <optional>

#include "qforms/forms.hpp"

namespace qforms {

enum class Connectivity { Connected, Disconnected, Unknown };

inline const char* to_string(Connectivity c) {
    switch (c) {
        case Connectivity::Connected: return "connected";
        case Connectivity::Disconnected: return "disconnected";
        default: return "unknown";
    }
}

namespace detail {

inline void require_positive_definite(const QForm& q) {
    if (!q.is_positive_definite())
        throw std::domain_error("form is not positive definite");
}

}  // namespace detail

// Existence of a positive definite rational form of rank m with determinant
// class D and Hasse map E (+1 outside the map's support). Specializes the
// classical existence criterion to signature (m, 0).
inline bool exists_posdef_with(int m, const Int& det_class,
                               const std::map<Place, int>& hasse) {
    if (m < 0) throw std::domain_error("negative rank");
    int prod = 1;
    bool trivial = true;
    for (const auto& [v, e] : hasse) {
        prod *= e;
        if (e != 1) trivial = false;
        if (v.is_real() && e != 1) return false;
    }
    if (prod != 1) return false;
    if (det_class <= 0) return false;
    if (m == 0) return det_class == 1 && trivial;
    if (m == 1) return trivial;  // rank-1 forms have empty Hasse product
    if (m == 2) {
        // E_v must be +1 wherever -D is a square in Q_v.
        for (const auto& [v, e] : hasse)
            if (e == -1 && is_square_at(Rational(-det_class), v)) return false;
    }
    return true;
}

// q1 embeds in q2 (q1 plus some positive definite complement is equivalent
// to q2), decided through the invariants of the required complement.
inline bool embeds(const QForm& q1, const QForm& q2) {
    detail::require_positive_definite(q1);
    detail::require_positive_definite(q2);
    if (q1.dim() > q2.dim()) return false;
    if (q1.dim() == q2.dim()) return equivalent(q1, q2);

    const FormInvariants a = invariants(q1);
    const FormInvariants b = invariants(q2);
    const int m = b.dim - a.dim;
    const Int det_x = square_class(Rational(a.det_class * b.det_class));

    const Rational da(a.det_class), db(b.det_class);
    std::set<Place> support = hilbert_support(da, -db);
    for (const auto& [v, e] : a.hasse) support.insert(v);
    for (const auto& [v, e] : b.hasse) support.insert(v);

    std::map<Place, int> hasse_x;
    for (const Place& v : support)
        hasse_x.emplace(v, b.hasse_at(v) * a.hasse_at(v) * hilbert(da, -db, v));

#ifndef NDEBUG
    // Outside the computed support every factor must be trivial; spot-check
    // a few primes to guard against support-set bugs.
    for (long p : {101L, 103L, 107L}) {
        const Place v = Place::at(p);
        if (!support.count(v))
            assert(b.hasse_at(v) * a.hasse_at(v) * hilbert(da, -db, v) == 1);
    }
#endif
    return exists_posdef_with(m, det_x, hasse_x);
}

// Nonemptiness of G(Q^n, q): the graph has an edge iff I_1 embeds in q.
inline bool is_nonempty(const QForm& q) {
    detail::require_positive_definite(q);
    return embeds(QForm::identity(1), q);
}

// omega(G(Q^n, q)) = 1 + max{k : S_k embeds in q}, with k = 0 allowed
// (a single vertex is a 1-clique even in an empty graph).
inline int clique_number(const QForm& q) {
    detail::require_positive_definite(q);
    for (int k = q.dim(); k >= 1; --k)
        if (embeds(simplex_form(k), q)) return k + 1;
    return 1;
}

// Reports only what the underlying theorems settle: connected for dim >= 5,
// disconnected when empty or when q is the standard form in dims 2..4.
inline Connectivity connectivity(const QForm& q) {
    detail::require_positive_definite(q);
    if (!is_nonempty(q)) return Connectivity::Disconnected;
    if (q.dim() >= 5) return Connectivity::Connected;
    if (q.dim() >= 2 && equivalent(q, QForm::identity(q.dim())))
        return Connectivity::Disconnected;
    return Connectivity::Unknown;
}

struct GraphReport {
    QForm form;
    bool nonempty = false;
    int clique_number = 1;
    Connectivity connectivity = Connectivity::Unknown;
    int max_simplex = 0;  // largest k with S_k embedding in the form
};

inline GraphReport analyze(const QForm& q) {
    GraphReport r{q};
    r.clique_number = clique_number(q);
    r.max_simplex = r.clique_number - 1;
    r.nonempty = r.clique_number >= 2;
    r.connectivity = connectivity(q);
    return r;
}

}  // namespace qforms
