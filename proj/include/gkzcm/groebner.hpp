// Commutative Groebner machinery: deterministic division, Buchberger with
// the normal pair-selection strategy and the coprime + chain criteria, and
// reduced bases (monic, fully interreduced, sorted by leading monomial).
//
// When config::verify_groebner_output is set, every basis returned by
// buchberger() is re-checked from scratch: all S-pairs and all input
// generators must reduce to zero. The acceptance suite runs with the switch
// on.
#pragma once

#include <algorithm>
#include <atomic>
#include <optional>
#include <set>
#include <vector>

#include "gkzcm/poly_io.hpp"
#include "gkzcm/polynomial.hpp"

namespace gkzcm {

namespace config {
inline std::atomic<bool> verify_groebner_output{false};
inline std::atomic<int> max_dimension_vars{16};
}  // namespace config

struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> gens;  // nonzero

    Ideal() = default;
    Ideal(RingPtr r, std::vector<Polynomial> g) : ring(std::move(r)) {
        gens.reserve(g.size());
        for (auto& p : g) {
            if (p.is_zero()) continue;
            check_same_ring(ring, p.ring());
            gens.push_back(std::move(p));
        }
    }
};

struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> elements;  // reduced; ascending leading monomial

    bool is_unit() const { return elements.size() == 1 && elements[0].is_unit_constant(); }
    bool is_zero() const { return elements.empty(); }
};

// Deterministic full normal form: reduce the greatest reducible term with the
// first basis element whose leading term divides it. `quotients`, when
// given, receives q_i with f = sum q_i g_i + remainder.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                              const MonomialOrder& order,
                              std::vector<Polynomial>* quotients = nullptr) {
    for (const auto& g : basis) {
        check_same_ring(f.ring(), g.ring());
        if (g.is_zero()) throw undefined_input_error("zero polynomial in a divisor basis");
    }
    if (quotients)
        quotients->assign(basis.size(), Polynomial::zero(f.ring(), order));
    std::vector<const Exponent*> lead(basis.size());
    std::vector<Polynomial> sorted;
    sorted.reserve(basis.size());
    for (const auto& g : basis) sorted.push_back(g.sorted_under(order));
    for (size_t i = 0; i < sorted.size(); ++i) lead[i] = &sorted[i].leading_exponent();

    Polynomial p = f.sorted_under(order);
    size_t frontier = 0;  // terms before frontier are irreducible
    while (frontier < p.terms().size()) {
        const Term& t = p.terms()[frontier];
        size_t hit = sorted.size();
        for (size_t i = 0; i < sorted.size(); ++i)
            if (exp_divides(*lead[i], t.exp)) {
                hit = i;
                break;
            }
        if (hit == sorted.size()) {
            ++frontier;
            continue;
        }
        Exponent q = exp_sub(t.exp, *lead[hit]);
        Rational c = t.coeff / sorted[hit].leading_coeff();
        // Subtraction cancels term `t` and only touches monomials <= t.
        p = p - sorted[hit].times_monomial(q, c);
        if (quotients)
            (*quotients)[hit] = (*quotients)[hit] + Polynomial::monomial(f.ring(), q, c, order);
    }
    return p;
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb,
                              std::vector<Polynomial>* quotients = nullptr) {
    return normal_form(f, gb.elements, gb.order, quotients);
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const MonomialOrder& order) {
    Polynomial fs = f.sorted_under(order), gs = g.sorted_under(order);
    Exponent l = exp_lcm(fs.leading_exponent(), gs.leading_exponent());
    return fs.times_monomial(exp_sub(l, fs.leading_exponent()), Rational(1) / fs.leading_coeff()) -
           gs.times_monomial(exp_sub(l, gs.leading_exponent()), Rational(1) / gs.leading_coeff());
}

namespace detail {

// Minimalize + tail-reduce + monic + sort ascending by leading monomial.
inline std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis,
                                            const MonomialOrder& order) {
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(a.leading_exponent(), b.leading_exponent()) < 0;
    });
    std::vector<Polynomial> minimal;
    for (auto& g : basis) {
        bool redundant = false;
        for (const auto& h : minimal)
            if (exp_divides(h.leading_exponent(), g.leading_exponent())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(std::move(g));
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial nf = others.empty() ? minimal[i].sorted_under(order)
                                       : normal_form(minimal[i], others, order);
        if (!nf.is_zero()) reduced.push_back(nf.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(a.leading_exponent(), b.leading_exponent()) < 0;
    });
    return reduced;
}

}  // namespace detail

// Checks the Groebner property from scratch (no pair skipping): every S-pair
// and every element of `generators` reduces to zero.
inline bool verify_groebner(const GroebnerBasis& gb,
                            const std::vector<Polynomial>& generators = {}) {
    const auto& G = gb.elements;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j)
            if (!normal_form(s_polynomial(G[i], G[j], gb.order), G, gb.order).is_zero())
                return false;
    for (const auto& g : generators)
        if (!normal_form(g, G, gb.order).is_zero()) return false;
    return true;
}

inline GroebnerBasis buchberger(const Ideal& I, MonomialOrder order = MonomialOrder::degrevlex()) {
    GroebnerBasis gb;
    gb.ring = I.ring;
    gb.order = order;

    std::vector<Polynomial> G;
    for (const auto& g : I.gens)
        if (!g.is_zero()) G.push_back(g.sorted_under(order).monic());
    if (G.empty()) return gb;

    struct PairKey {
        long long deg;
        Exponent lcm;
        size_t i, j;
        bool operator<(const PairKey& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (lcm != o.lcm) return lcm < o.lcm;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<PairKey> queue;
    std::set<std::pair<size_t, size_t>> done;
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Exponent l = exp_lcm(G[i].leading_exponent(), G[j].leading_exponent());
            queue.insert({total_degree(l), std::move(l), i, j});
        }
    };
    for (size_t j = 1; j < G.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        done.insert({pk.i, pk.j});
        // Coprime leading terms: S-pair reduces to zero.
        if (exp_coprime(G[pk.i].leading_exponent(), G[pk.j].leading_exponent())) continue;
        // Chain criterion: some k with lm_k | lcm(i,j) and both other pairs
        // already treated.
        bool chained = false;
        for (size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!exp_divides(G[k].leading_exponent(), pk.lcm)) continue;
            auto key = [&](size_t a, size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (done.count(key(pk.i, k)) && done.count(key(pk.j, k))) chained = true;
        }
        if (chained) continue;

        Polynomial s = s_polynomial(G[pk.i], G[pk.j], order);
        Polynomial r = normal_form(s, G, order);
        if (r.is_zero()) continue;
        G.push_back(r.monic());
        push_pairs(G.size() - 1);
    }

    gb.elements = detail::reduce_basis(std::move(G), order);
    if (config::verify_groebner_output.load() && !verify_groebner(gb, I.gens))
        throw internal_error("groebner verification failed");
    return gb;
}

inline Ideal ideal_from_gb(const GroebnerBasis& gb) { return Ideal(gb.ring, gb.elements); }

// Extended Buchberger: returns the reduced basis plus cofactor matrices with
// gb.elements = A * gens and gens = B * gb.elements.
struct TracedBasis {
    GroebnerBasis gb;
    std::vector<std::vector<Polynomial>> a;  // |gb| x |gens|
    std::vector<std::vector<Polynomial>> b;  // |gens| x |gb|
};

inline TracedBasis buchberger_with_trace(const Ideal& I,
                                         MonomialOrder order = MonomialOrder::degrevlex()) {
    TracedBasis out;
    out.gb.ring = I.ring;
    out.gb.order = order;
    const size_t r = I.gens.size();
    auto zero_row = [&] { return std::vector<Polynomial>(r, Polynomial::zero(I.ring, order)); };

    std::vector<Polynomial> G;
    std::vector<std::vector<Polynomial>> rows;  // G = rows * gens
    for (size_t i = 0; i < r; ++i) {
        if (I.gens[i].is_zero()) continue;
        Polynomial g = I.gens[i].sorted_under(order);
        auto row = zero_row();
        row[i] = Polynomial::constant(I.ring, Rational(1) / g.leading_coeff(), order);
        rows.push_back(std::move(row));
        G.push_back(g.monic());
    }

    std::set<std::pair<size_t, size_t>> pending;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) pending.insert({i, j});
    while (!pending.empty()) {
        auto [i, j] = *pending.begin();
        pending.erase(pending.begin());
        Exponent l = exp_lcm(G[i].leading_exponent(), G[j].leading_exponent());
        Exponent qi = exp_sub(l, G[i].leading_exponent());
        Exponent qj = exp_sub(l, G[j].leading_exponent());
        Polynomial s = G[i].times_monomial(qi, 1) - G[j].times_monomial(qj, 1);
        std::vector<Polynomial> q;
        Polynomial rem = normal_form(s, G, order, &q);
        if (rem.is_zero()) continue;
        auto row = zero_row();
        for (size_t t = 0; t < r; ++t) {
            Polynomial v = rows[i][t].times_monomial(qi, 1) - rows[j][t].times_monomial(qj, 1);
            for (size_t k = 0; k < G.size(); ++k)
                if (!q[k].is_zero()) v = v - q[k] * rows[k][t];
            row[t] = v * (Rational(1) / rem.leading_coeff());
        }
        G.push_back(rem.monic());
        rows.push_back(std::move(row));
        for (size_t k = 0; k + 1 < G.size(); ++k) pending.insert({k, G.size() - 1});
    }

    // Express the reduced basis through the raw one.
    std::vector<Polynomial> reduced = detail::reduce_basis(G, order);
    out.a.reserve(reduced.size());
    for (const auto& e : reduced) {
        std::vector<Polynomial> q;
        Polynomial rem = normal_form(e, G, order, &q);
        if (!rem.is_zero()) throw internal_error("reduced basis element not in raw basis span");
        auto row = zero_row();
        for (size_t k = 0; k < G.size(); ++k)
            if (!q[k].is_zero())
                for (size_t t = 0; t < r; ++t) row[t] = row[t] + q[k] * rows[k][t];
        out.a.push_back(std::move(row));
    }
    out.gb.elements = std::move(reduced);

    out.b.assign(r, std::vector<Polynomial>(out.gb.elements.size(),
                                            Polynomial::zero(I.ring, order)));
    for (size_t t = 0; t < r; ++t) {
        std::vector<Polynomial> q;
        Polynomial rem = normal_form(I.gens[t], out.gb.elements, order, &q);
        if (!rem.is_zero()) throw internal_error("generator does not reduce to zero by its basis");
        out.b[t] = std::move(q);
    }
    if (config::verify_groebner_output.load() && !verify_groebner(out.gb, I.gens))
        throw internal_error("groebner verification failed");
    return out;
}

}  // namespace gkzcm
