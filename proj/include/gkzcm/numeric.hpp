// Exact arithmetic aliases and small helpers on top of GMP.
//
// Rational is always canonical: lowest terms, positive denominator. gmpxx
// guarantees this for results of arithmetic on canonical operands; the parse
// helper canonicalizes explicitly.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "gkzcm/errors.hpp"

namespace gkzcm {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational_of(long long v) { return Rational(static_cast<long>(v)); }

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw undefined_input_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "a" or "a/b" with optional sign.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw validation_error("empty rational literal");
    try {
        Rational q(text);
        if (q.get_den() == 0) throw validation_error("rational literal with zero denominator: " + text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw validation_error("malformed rational literal: " + text);
    }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace gkzcm
