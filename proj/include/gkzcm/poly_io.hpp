// Text syntax for polynomials: terms like `3/2*x1^2*d2` joined by + and -.
// Variable names are whatever the ring declares. Printing is canonical:
// terms in decreasing active order, factors in variable-index order.
#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "gkzcm/polynomial.hpp"

namespace gkzcm {

namespace detail {

struct PolyLexer {
    const std::string& s;
    size_t pos = 0;

    explicit PolyLexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        return s.substr(start, pos - start);
    }

    std::string name() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

// One product of factors; returns (coefficient, exponent).
inline Term parse_term(PolyLexer& lx, const PolyRing& R) {
    Term t{Exponent(R.nvars(), 0), Rational(1)};
    bool expect_factor = true;
    while (expect_factor) {
        char c = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.coeff *= parse_rational(lx.number());
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string v = lx.name();
            int j = R.var_index(v);
            if (j < 0) throw validation_error("unknown variable '" + v + "' in polynomial text");
            int e = 1;
            if (lx.accept('^')) {
                std::string n = lx.number();
                if (n.empty() || n.find('/') != std::string::npos)
                    throw validation_error("malformed exponent in polynomial text");
                e = std::stoi(n);
                if (e < 0) throw validation_error("negative exponent in polynomial text");
            }
            t.exp[j] += e;
        } else {
            throw validation_error("expected a factor in polynomial text");
        }
        expect_factor = lx.accept('*');
    }
    return t;
}

}  // namespace detail

inline Polynomial parse_polynomial(const RingPtr& ring, const std::string& text,
                                   MonomialOrder order = MonomialOrder::degrevlex()) {
    detail::PolyLexer lx(text);
    std::vector<Term> terms;
    if (lx.done()) throw validation_error("empty polynomial text");
    bool negate = false;
    if (lx.accept('-'))
        negate = true;
    else
        lx.accept('+');
    while (true) {
        Term t = detail::parse_term(lx, *ring);
        if (negate) t.coeff = -t.coeff;
        terms.push_back(std::move(t));
        if (lx.done()) break;
        if (lx.accept('+'))
            negate = false;
        else if (lx.accept('-'))
            negate = true;
        else
            throw validation_error("expected + or - between terms in polynomial text");
    }
    return Polynomial(ring, std::move(terms), std::move(order));
}

inline std::string monomial_to_string(const PolyRing& R, const Exponent& e) {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) continue;
        if (!first) os << '*';
        os << R.vars[j];
        if (e[j] > 1) os << '^' << e[j];
        first = false;
    }
    return os.str();
}

inline std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms()) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (c < 0 ? '-' : '+');
            if (c < 0) c = -c;
        }
        std::string mono = monomial_to_string(*f.ring(), t.exp);
        if (mono.empty()) {
            os << to_string(c);
        } else {
            if (c != 1) os << to_string(c) << '*';
            os << mono;
        }
        first = false;
    }
    return os.str();
}

inline std::string to_string(const Polynomial& f, const MonomialOrder& order) {
    return to_string(f.sorted_under(order));
}

}  // namespace gkzcm
