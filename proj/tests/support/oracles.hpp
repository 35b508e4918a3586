// Independent reference implementations used to cross-check the library:
// convolution multiplication, ideal membership by bounded-degree linear
// algebra, toric ideals by degree-bounded binomial enumeration, and Weyl
// multiplication by one-commutator-at-a-time rewriting. These deliberately
// avoid the algorithms under test.
#pragma once

#include <map>
#include <vector>

#include "gkzcm/gkzcm.hpp"

namespace oracles {

using namespace gkzcm;

inline Polynomial naive_multiply(const Polynomial& f, const Polynomial& g) {
    std::map<Exponent, Rational> acc;
    for (const auto& a : f.terms())
        for (const auto& b : g.terms()) acc[exp_add(a.exp, b.exp)] += a.coeff * b.coeff;
    std::vector<Term> ts;
    for (const auto& [e, c] : acc)
        if (c != 0) ts.push_back({e, c});
    return Polynomial(f.ring(), std::move(ts), f.order());
}

// All exponents in nvars variables of total degree exactly deg.
inline void exponents_of_degree(size_t nvars, int deg, Exponent& cur, size_t pos,
                                std::vector<Exponent>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = deg;
        out.push_back(cur);
        return;
    }
    for (int k = 0; k <= deg; ++k) {
        cur[pos] = k;
        exponents_of_degree(nvars, deg - k, cur, pos + 1, out);
    }
}

inline std::vector<Exponent> exponents_up_to(size_t nvars, int deg) {
    std::vector<Exponent> out;
    Exponent cur(nvars, 0);
    for (int d = 0; d <= deg; ++d) exponents_of_degree(nvars, d, cur, 0, out);
    return out;
}

// f in <gens> decided by solving sum_i q_i g_i = f with deg q_i <= bound
// - deg g_i over the monomial coefficient equations. Sound and complete for
// homogeneous inputs whenever bound >= deg f; a plain sufficient check
// otherwise.
inline bool member_by_linear_algebra(const Polynomial& f, const std::vector<Polynomial>& gens,
                                     int bound) {
    const size_t nvars = f.ring()->nvars();
    // Unknown layout: one block per generator, one unknown per multiplier
    // monomial. Equations: coefficients of every monomial of the sum.
    std::vector<std::pair<size_t, Exponent>> unknowns;
    std::vector<std::vector<Exponent>> mults(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        int room = bound - static_cast<int>(gens[i].degree());
        if (room < 0) continue;
        mults[i] = exponents_up_to(nvars, room);
        for (const auto& m : mults[i]) unknowns.push_back({i, m});
    }
    std::map<Exponent, size_t> eqn_index;
    auto eqn_of = [&](const Exponent& e) {
        return eqn_index.emplace(e, eqn_index.size()).first->second;
    };
    std::vector<std::map<size_t, Rational>> cols(unknowns.size());
    for (size_t u = 0; u < unknowns.size(); ++u) {
        const auto& [i, m] = unknowns[u];
        for (const auto& t : gens[i].terms()) cols[u][eqn_of(exp_add(m, t.exp))] = t.coeff;
    }
    std::map<size_t, Rational> rhs;
    for (const auto& t : f.terms()) rhs[eqn_of(t.exp)] = t.coeff;

    QMatrix a(eqn_index.size(), QRow(unknowns.size(), Rational(0)));
    QRow b(eqn_index.size(), Rational(0));
    for (size_t u = 0; u < unknowns.size(); ++u)
        for (const auto& [row, c] : cols[u]) a[row][u] = c;
    for (const auto& [row, c] : rhs) b[row] = c;
    return solve_linear(std::move(a), b).has_value();
}

// Toric ideal by enumeration: all primitive binomials d^u - d^v with
// A u = A v, gcd(d^u, d^v) = 1, total degree <= bound. Multiples of
// primitive binomials stay in the generated ideal, so this generates every
// binomial of I_A up to the degree bound.
inline Ideal toric_by_enumeration(const IntegerMatrix& A, const RingPtr& R, int bound) {
    std::map<std::vector<long long>, std::vector<Exponent>> by_degree;
    for (const auto& e : exponents_up_to(A.n, bound)) {
        std::vector<long long> deg(A.d, 0);
        for (size_t i = 0; i < A.d; ++i)
            for (size_t j = 0; j < A.n; ++j) deg[i] += A.rows[i][j] * e[j];
        by_degree[deg].push_back(e);
    }
    std::vector<Polynomial> gens;
    for (const auto& [deg, exps] : by_degree)
        for (size_t s = 0; s < exps.size(); ++s)
            for (size_t t = s + 1; t < exps.size(); ++t) {
                if (!exp_coprime(exps[s], exps[t])) continue;
                gens.push_back(Polynomial::monomial(R, exps[s]) -
                               Polynomial::monomial(R, exps[t]));
            }
    return Ideal(R, std::move(gens));
}

// Weyl product by single commutations: peel one derivative at a time and
// apply d_i x_i^m = x_i^m d_i + m x_i^{m-1}. Independent of the
// binomial-sum contraction formula in the library.
inline WeylElement rewrite_multiply(const WeylElement& P, const WeylElement& Q) {
    const WeylAlgebra& alg = P.algebra();
    if (alg.homogenized)
        throw validation_error("rewrite oracle only covers the plain algebra");
    using Acc = std::map<Exponent, Rational>;

    // one monomial times one monomial, recursively
    auto mono = [&](auto&& self, Exponent a, Rational c, const Exponent& b) -> Acc {
        // find the last derivative in a (positions n..2n-1)
        size_t i = alg.n;
        for (size_t k = 0; k < alg.n; ++k)
            if (a[alg.d_pos(k)] > 0) i = k;
        if (i == alg.n) {
            Acc out;
            out[exp_add(a, b)] = c;
            return out;
        }
        Exponent head = a;
        head[alg.d_pos(i)] -= 1;
        // d_i * x^b d^.. = (x-part with x_i reduced) + commuted term
        Exponent moved = b;
        moved[alg.d_pos(i)] += 1;
        Acc out = self(self, head, c, moved);
        if (b[alg.x_pos(i)] > 0) {
            Exponent dropped = b;
            dropped[alg.x_pos(i)] -= 1;
            Acc extra = self(self, head, c * b[alg.x_pos(i)], dropped);
            for (const auto& [e, v] : extra) out[e] += v;
        }
        return out;
    };

    Acc acc;
    for (const auto& [ea, ca] : P.terms())
        for (const auto& [eb, cb] : Q.terms()) {
            Acc part = mono(mono, ea, ca * cb, eb);
            for (const auto& [e, v] : part) acc[e] += v;
        }
    WeylElement out = WeylElement::zero(alg);
    for (const auto& [e, v] : acc)
        if (v != 0) out = out + WeylElement::monomial(alg, e, v);
    return out;
}

}  // namespace oracles
