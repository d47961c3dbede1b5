#pragma once

#include <set>

#include "qforms/exactnum.hpp"

namespace qforms {

// Hilbert symbol (a, b)_v: +1 iff z^2 = a x^2 + b y^2 has a nontrivial
// solution over Q_v. Both arguments are reduced to square classes first,
// so square invariance holds by construction.
inline int hilbert(const Rational& a, const Rational& b, const Place& v) {
    if (a == 0 || b == 0) throw std::domain_error("hilbert symbol of zero");
    const Int sa = square_class(a);
    const Int sb = square_class(b);
    if (v.is_real()) return (sa < 0 && sb < 0) ? -1 : 1;

    const Int& p = v.prime();
    // Squarefree representatives have p-valuation 0 or 1.
    const int alpha = mpz_divisible_p(sa.get_mpz_t(), p.get_mpz_t()) ? 1 : 0;
    const int beta = mpz_divisible_p(sb.get_mpz_t(), p.get_mpz_t()) ? 1 : 0;
    const Int u = alpha ? Int(sa / p) : sa;
    const Int w = beta ? Int(sb / p) : sb;

    if (p == 2) {
        const auto eps = [](const Int& t) { return detail::mod_si(t, 4) == 3 ? 1 : 0; };
        const auto omega = [](const Int& t) {
            const long m = detail::mod_si(t, 8);
            return (m == 3 || m == 5) ? 1 : 0;
        };
        const int e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
        return e % 2 ? -1 : 1;
    }

    int sign = 1;
    if (alpha && beta && detail::mod_si(p, 4) == 3) sign = -sign;
    if (beta) sign *= legendre(u, p);
    if (alpha) sign *= legendre(w, p);
    return sign;
}

// {inf, 2} plus every odd prime dividing a numerator or denominator of a
// or b; the symbol is +1 at every place outside this set.
inline std::set<Place> hilbert_support(const Rational& a, const Rational& b) {
    if (a == 0 || b == 0) throw std::domain_error("hilbert support of zero");
    std::set<Place> s{Place::infinity(), Place::at(2)};
    for (const Rational& r : {a, b})
        for (const Int& part : {Int(abs(r.get_num())), Int(r.get_den())})
            for (const auto& [p, e] : factorize(part))
                if (p != 2) s.insert(Place::at(p));
    return s;
}

// Product formula: the symbols over the support multiply to +1.
inline bool product_formula_holds(const Rational& a, const Rational& b) {
    int prod = 1;
    for (const Place& v : hilbert_support(a, b)) prod *= hilbert(a, b, v);
    return prod == 1;
}

}  // namespace qforms
