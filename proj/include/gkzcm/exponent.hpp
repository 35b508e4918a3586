// Exponent vectors of commutative monomials (and normally ordered Weyl
// monomials, which share the representation). Entries are nonnegative.
#pragma once

#include <cstdint>
#include <vector>

#include "gkzcm/errors.hpp"
#include "gkzcm/numeric.hpp"

namespace gkzcm {

using Exponent = std::vector<int>;

inline void check_same_length(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) throw dimension_error("exponent vectors of different length");
}

inline long long total_degree(const Exponent& a) {
    long long d = 0;
    for (int e : a) d += e;
    return d;
}

inline Rational weighted_degree(const Exponent& a, const std::vector<Rational>& w) {
    if (a.size() != w.size()) throw dimension_error("weight vector length differs from exponent length");
    Rational d = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) d += w[i] * a[i];
    return d;
}

inline Exponent exp_add(const Exponent& a, const Exponent& b) {
    check_same_length(a, b);
    Exponent r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// Requires b | a componentwise.
inline Exponent exp_sub(const Exponent& a, const Exponent& b) {
    check_same_length(a, b);
    Exponent r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw undefined_input_error("exponent subtraction below zero");
    }
    return r;
}

inline bool exp_divides(const Exponent& a, const Exponent& b) {  // a | b
    check_same_length(a, b);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponent exp_lcm(const Exponent& a, const Exponent& b) {
    check_same_length(a, b);
    Exponent r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

inline bool exp_coprime(const Exponent& a, const Exponent& b) {
    check_same_length(a, b);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

inline bool is_zero_exponent(const Exponent& a) {
    for (int e : a)
        if (e != 0) return false;
    return true;
}

inline uint64_t support_mask(const Exponent& a) {
    if (a.size() > 64) throw dimension_error("support mask limited to 64 variables");
    uint64_t m = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) m |= uint64_t{1} << i;
    return m;
}

}  // namespace gkzcm
