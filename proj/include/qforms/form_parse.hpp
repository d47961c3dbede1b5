#pragma once

#include <cstddef>
#include <string>

#include "qforms/forms.hpp"

namespace qforms {

// Syntax error in the form grammar, with the offending position.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)),
          position(pos) {}
    std::size_t position;
};

namespace detail {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return eof() ? '\0' : text[pos]; }

    void expect(char c) {
        if (peek() != c)
            throw parse_error(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    // rational literal: [+-]?digits(/digits)?
    Rational rational() {
        const std::size_t start = pos;
        if (peek() == '+' || peek() == '-') ++pos;
        while (peek() >= '0' && peek() <= '9') ++pos;
        if (peek() == '/') {
            ++pos;
            while (peek() >= '0' && peek() <= '9') ++pos;
        }
        if (pos == start) throw parse_error("expected rational", pos);
        try {
            return parse_rational(text.substr(start, pos - start));
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what(), start);
        }
    }

    long integer() {
        const std::size_t start = pos;
        while (peek() >= '0' && peek() <= '9') ++pos;
        if (pos == start) throw parse_error("expected integer", pos);
        return std::stol(text.substr(start, pos - start));
    }
};

}  // namespace detail

// Form grammar: `I<n>`, `I<n>/<d>`, `S<n>`, `diag:a1,a2,...`,
// `gram:[[...],[...],...]`. Validates symmetry and positive definiteness.
inline QForm parse_form(const std::string& text) {
    detail::Cursor c{text};
    QForm q = [&]() -> QForm {
        switch (c.peek()) {
            case 'I': {
                ++c.pos;
                const long n = c.integer();
                if (n < 1) throw parse_error("dimension must be >= 1", 1);
                if (c.peek() == '/') {
                    ++c.pos;
                    const Rational d = c.rational();
                    if (d <= 0) throw parse_error("scale must be positive", c.pos);
                    return scaled_identity(static_cast<int>(n), d);
                }
                return QForm::identity(static_cast<int>(n));
            }
            case 'S': {
                ++c.pos;
                const long n = c.integer();
                if (n < 1) throw parse_error("dimension must be >= 1", 1);
                return simplex_form(static_cast<int>(n));
            }
            case 'd': {
                if (text.compare(0, 5, "diag:") != 0)
                    throw parse_error("unknown form syntax", 0);
                c.pos = 5;
                Vec entries{c.rational()};
                while (c.peek() == ',') {
                    ++c.pos;
                    entries.push_back(c.rational());
                }
                return QForm::diagonal(std::move(entries));
            }
            case 'g': {
                if (text.compare(0, 6, "gram:[") != 0)
                    throw parse_error("unknown form syntax", 0);
                c.pos = 5;
                c.expect('[');
                Matrix rows;
                while (true) {
                    c.expect('[');
                    Vec row{c.rational()};
                    while (c.peek() == ',') {
                        ++c.pos;
                        row.push_back(c.rational());
                    }
                    c.expect(']');
                    rows.push_back(std::move(row));
                    if (c.peek() != ',') break;
                    ++c.pos;
                }
                c.expect(']');
                try {
                    return QForm(std::move(rows));
                } catch (const std::domain_error& e) {
                    throw parse_error(e.what(), 5);
                }
            }
            default:
                throw parse_error("unknown form syntax", c.pos);
        }
    }();
    if (!c.eof()) throw parse_error("trailing input", c.pos);

    if (const int k = q.first_nonpositive_minor(); k != 0)
        throw std::domain_error("form is not positive definite (leading minor " +
                                std::to_string(k) + " is not positive)");
    return q;
}

// Canonical printout: identity and diagonal forms get the short spellings,
// everything else the full Gram matrix.
inline std::string form_to_string(const QForm& q) {
    const int n = q.dim();
    bool diag = true;
    for (int i = 0; i < n && diag; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && q.at(i, j) != 0) {
                diag = false;
                break;
            }
    if (diag) {
        bool ident = true;
        for (int i = 0; i < n; ++i)
            if (q.at(i, i) != 1) ident = false;
        if (ident) return "I" + std::to_string(n);
        std::string s = "diag:";
        for (int i = 0; i < n; ++i) {
            if (i) s += ',';
            s += to_string(q.at(i, i));
        }
        return s;
    }
    std::string s = "gram:[";
    for (int i = 0; i < n; ++i) {
        if (i) s += ',';
        s += '[';
        for (int j = 0; j < n; ++j) {
            if (j) s += ',';
            s += to_string(q.at(i, j));
        }
        s += ']';
    }
    s += ']';
    return s;
}

}  // namespace qforms
