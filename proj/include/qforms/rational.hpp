#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qforms {

using Int = mpz_class;

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator), which makes structural equality semantic equality.
using Rational = mpq_class;

namespace detail {

inline bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace detail

// Parses `p` or `p/q` in base 10, no whitespace inside.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!detail::is_integer_literal(text))
            throw std::invalid_argument("bad rational literal: '" + text + "'");
        return Rational(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den))
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    Int d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    Rational r(Int(num), d);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) {
    return r.get_str();
}

}  // namespace qforms
