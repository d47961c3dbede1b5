#pragma once

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qforms/rational.hpp"

namespace qforms {

namespace detail {

inline Int powm(Int base, Int exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

// Nonnegative residue, also for negative x.
inline long mod_si(const Int& x, long m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r.get_si();
}

}  // namespace detail

// Miller-Rabin with the fixed base set {2,...,37}; deterministic for
// n < 3.3e24, far beyond the supported input range.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (long p : small) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (long a : small) {
        Int x = detail::powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned long r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// A place of Q: a prime p or the real place.
class Place {
public:
    static Place infinity() { return Place(); }

    static Place at(Int p) {
        if (!is_prime(p))
            throw std::domain_error("not a prime: " + p.get_str());
        Place v;
        v.real_ = false;
        v.prime_ = std::move(p);
        return v;
    }

    bool is_real() const { return real_; }

    const Int& prime() const {
        if (real_) throw std::logic_error("real place has no prime");
        return prime_;
    }

    bool operator==(const Place& o) const {
        return real_ == o.real_ && prime_ == o.prime_;
    }
    bool operator!=(const Place& o) const { return !(*this == o); }
    // Real place sorts first, then primes in order.
    bool operator<(const Place& o) const {
        if (real_ != o.real_) return real_;
        return prime_ < o.prime_;
    }

    std::string str() const { return real_ ? "inf" : prime_.get_str(); }

private:
    Place() = default;
    bool real_ = true;
    Int prime_ = 0;
};

namespace detail {

inline long factor_budget() {
    static const long budget = [] {
        const char* s = std::getenv("QFORM_FACTOR_BUDGET");
        return s ? std::atol(s) : 20'000'000L;
    }();
    return budget;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of odd
// composite n, charging iterations against *budget.
inline Int pollard_brent(const Int& n, long& budget) {
    for (long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1, q = 1, ys = y;
        long r = 1;
        auto step = [&](Int& v) { v = (v * v + c) % n; };
        while (d == 1) {
            x = y;
            for (long i = 0; i < r; ++i) step(y);
            for (long k = 0; k < r && d == 1; k += 128) {
                ys = y;
                const long m = std::min(128L, r - k);
                for (long i = 0; i < m; ++i) {
                    step(y);
                    q = q * abs(x - y) % n;
                }
                budget -= m;
                if (budget <= 0)
                    throw std::runtime_error(
                        "factorization budget exceeded (QFORM_FACTOR_BUDGET)");
                d = gcd(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            // Backtrack one block to recover the factor.
            do {
                step(ys);
                d = gcd(abs(x - ys), n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

inline void factor_into(Int n, std::map<Int, unsigned>& out, long& budget) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_brent(n, budget);
    factor_into(d, out, budget);
    factor_into(n / d, out, budget);
}

}  // namespace detail

// Prime factorization of n >= 1 as prime -> multiplicity.
inline std::map<Int, unsigned> factorize(const Int& n) {
    if (n < 1) throw std::domain_error("factorize requires n >= 1");
    std::map<Int, unsigned> out;
    Int m = n;
    for (long p = 2; p <= 10'000 && m > 1; p += (p == 2) ? 1 : 2) {
        if (Int(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[Int(p)];
            m /= p;
        }
    }
    if (m > 1) {
        long budget = detail::factor_budget();
        detail::factor_into(m, out, budget);
    }
    return out;
}

// Signed squarefree representative of r modulo nonzero rational squares.
inline Int square_class(const Rational& r) {
    if (r == 0) throw std::domain_error("square class of zero");
    Rational v = r;
    v.canonicalize();
    Int s = 1;
    for (const Int& part : {Int(abs(v.get_num())), Int(v.get_den())})
        for (const auto& [p, e] : factorize(part))
            if (e % 2 != 0) s *= p;
    return r < 0 ? Int(-s) : s;
}

// Legendre symbol (a | p) for odd prime p.
inline int legendre(const Int& a, const Int& p) {
    if (p == 2 || !is_prime(p))
        throw std::domain_error("legendre requires an odd prime");
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

// Is x a square in the completion Q_v?
inline bool is_square_at(const Rational& x, const Place& v) {
    if (x == 0) throw std::domain_error("squareness of zero");
    if (v.is_real()) return x > 0;
    const Int s = square_class(x);
    if (s == 1) return true;
    const Int& p = v.prime();
    // s squarefree: v_p(s) is 0 or 1, odd valuation is never a square.
    if (mpz_divisible_p(s.get_mpz_t(), p.get_mpz_t())) return false;
    if (p == 2) return detail::mod_si(s, 8) == 1;
    return legendre(s, p) == 1;
}

}  // namespace qforms
