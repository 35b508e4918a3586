// Free-module machinery for syzygy computation.
//
// Levels of a resolution are handled uniformly: level 0 is the rank-1 free
// module over the ring, and each further level carries the Schreyer order
// induced by the leading monomials of the previous level's basis. Under a
// Schreyer order the trace syzygies of all S-pairs of a Groebner basis form
// a Groebner basis of the syzygy module, so no module-level Buchberger is
// ever needed (classical Schreyer construction).
#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "gkzcm/polynomial.hpp"

namespace gkzcm {

struct ModuleMono {
    int comp = 0;
    Exponent exp;
};

struct ModuleTerm {
    ModuleMono mono;
    Rational coeff;
};

// Monomial order on a free module: base ring order on telescoped exponents,
// ties broken by the component chains (deepest level first, smaller index
// greater), finally by own component.
class SchreyerContext {
  public:
    // Rank-1 module over the ring itself.
    static SchreyerContext ring_level(const MonomialOrder& base, size_t nvars) {
        SchreyerContext c;
        c.base_ = base;
        c.fast_ = base.kind == MonomialOrder::Kind::degrevlex;
        c.label_.assign(1, Exponent(nvars, 0));
        c.label_deg_.assign(1, 0);
        c.chain_.assign(1, {});
        return c;
    }

    // Module on basis slots labelled by the lead monomials of `basis`
    // (elements of the module ordered by `prev`).
    static SchreyerContext induced(const SchreyerContext& prev,
                                   const std::vector<ModuleMono>& leads) {
        SchreyerContext c;
        c.base_ = prev.base_;
        c.fast_ = prev.fast_;
        c.label_.reserve(leads.size());
        c.label_deg_.reserve(leads.size());
        c.chain_.reserve(leads.size());
        for (const auto& m : leads) {
            c.label_.push_back(exp_add(m.exp, prev.label_[m.comp]));
            c.label_deg_.push_back(total_degree(c.label_.back()));
            std::vector<int> ch = prev.chain_[m.comp];
            ch.push_back(m.comp);
            c.chain_.push_back(std::move(ch));
        }
        return c;
    }

    size_t rank() const { return label_.size(); }

    int compare(const ModuleMono& a, const ModuleMono& b) const {
        int r = fast_ ? cmp_degrevlex_telescoped(a, b)
                      : base_.compare(exp_add(a.exp, label_[a.comp]),
                                      exp_add(b.exp, label_[b.comp]));
        if (r != 0) return r;
        const auto& ca = chain_[a.comp];
        const auto& cb = chain_[b.comp];
        for (size_t i = 0; i < ca.size() && i < cb.size(); ++i)
            if (ca[i] != cb[i]) return ca[i] < cb[i] ? 1 : -1;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
    }

    bool greater(const ModuleMono& a, const ModuleMono& b) const { return compare(a, b) > 0; }

  private:
    // degrevlex on the telescoped exponents exp + label, nothing materialized
    int cmp_degrevlex_telescoped(const ModuleMono& a, const ModuleMono& b) const {
        long long da = total_degree(a.exp) + label_deg_[a.comp];
        long long db = total_degree(b.exp) + label_deg_[b.comp];
        if (da != db) return da > db ? 1 : -1;
        const Exponent &la = label_[a.comp], &lb = label_[b.comp];
        for (size_t i = a.exp.size(); i-- > 0;) {
            int va = a.exp[i] + la[i], vb = b.exp[i] + lb[i];
            if (va != vb) return va < vb ? 1 : -1;
        }
        return 0;
    }

    MonomialOrder base_;
    bool fast_ = false;
    std::vector<Exponent> label_;
    std::vector<long long> label_deg_;
    std::vector<std::vector<int>> chain_;
};

// Element of a free module; terms strictly descending under the context it
// was normalized with.
struct VectorPoly {
    std::vector<ModuleTerm> terms;

    bool is_zero() const { return terms.empty(); }
    const ModuleTerm& lead() const {
        if (terms.empty()) throw undefined_input_error("lead of zero module element");
        return terms.front();
    }
};

namespace detail {

inline void normalize_vp(VectorPoly& v, const SchreyerContext& ctx) {
    std::sort(v.terms.begin(), v.terms.end(), [&](const ModuleTerm& a, const ModuleTerm& b) {
        return ctx.compare(a.mono, b.mono) > 0;
    });
    std::vector<ModuleTerm> out;
    out.reserve(v.terms.size());
    for (auto& t : v.terms) {
        if (!out.empty() && out.back().mono.comp == t.mono.comp &&
            out.back().mono.exp == t.mono.exp)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    v.terms = std::move(out);
}

// a - c * x^e * b, all inputs normalized under ctx.
inline VectorPoly vp_sub_scaled(const VectorPoly& a, const VectorPoly& b, const Exponent& e,
                                const Rational& c, const SchreyerContext& ctx) {
    VectorPoly out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    auto shifted = [&](size_t jj) {
        return ModuleMono{b.terms[jj].mono.comp, exp_add(b.terms[jj].mono.exp, e)};
    };
    while (i < a.terms.size() && j < b.terms.size()) {
        ModuleMono mb = shifted(j);
        int cmp = ctx.compare(a.terms[i].mono, mb);
        if (cmp > 0) {
            out.terms.push_back(a.terms[i++]);
        } else if (cmp < 0) {
            out.terms.push_back({std::move(mb), -c * b.terms[j].coeff});
            ++j;
        } else {
            Rational v = a.terms[i].coeff - c * b.terms[j].coeff;
            if (v != 0) out.terms.push_back({a.terms[i].mono, std::move(v)});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) out.terms.push_back({shifted(j), -c * b.terms[j].coeff});
    return out;
}

}  // namespace detail

// Divisor index of a basis, bucketed by lead component so division skips
// unrelated components. Bucket order preserves basis order, which keeps the
// division deterministic (first basis element in sequence order wins).
inline std::map<int, std::vector<size_t>> lead_buckets(const std::vector<VectorPoly>& basis) {
    std::map<int, std::vector<size_t>> buckets;
    for (size_t i = 0; i < basis.size(); ++i)
        buckets[basis[i].terms.front().mono.comp].push_back(i);
    return buckets;
}

// Divides v by the (monic) basis, reducing the lead each step; returns the
// remainder and accumulates the nonzero ring-polynomial quotients by index.
inline VectorPoly module_divide(VectorPoly v, const std::vector<VectorPoly>& basis,
                                const std::map<int, std::vector<size_t>>& buckets,
                                const SchreyerContext& ctx, const RingPtr& ring,
                                std::map<size_t, Polynomial>* quotients) {
    if (quotients) quotients->clear();
    while (!v.is_zero()) {
        const ModuleTerm& t = v.terms.front();
        size_t hit = basis.size();
        auto bucket = buckets.find(t.mono.comp);
        if (bucket != buckets.end())
            for (size_t i : bucket->second)
                if (exp_divides(basis[i].terms.front().mono.exp, t.mono.exp)) {
                    hit = i;
                    break;
                }
        if (hit == basis.size()) return v;  // lead irreducible: done for our callers
        Exponent q = exp_sub(t.mono.exp, basis[hit].terms.front().mono.exp);
        Rational c = t.coeff / basis[hit].terms.front().coeff;
        if (quotients) {
            auto [it, fresh] = quotients->try_emplace(hit, Polynomial(ring));
            it->second = it->second + Polynomial::monomial(ring, q, c);
        }
        v = detail::vp_sub_scaled(v, basis[hit], q, c, ctx);
    }
    return v;
}

// One Schreyer step: basis = Groebner basis of a submodule of the module
// ordered by ctx (monic, sorted descending by lead). Returns the trace
// syzygies of the pruned S-pairs; they form a Groebner basis of Syz(basis)
// under SchreyerContext::induced(ctx, leads). Each syzygy is monic with lead
// term x^qi E_i but its tail is unsorted: the caller normalizes under the
// induced context.
inline std::vector<VectorPoly> schreyer_syzygies(const std::vector<VectorPoly>& basis,
                                                 const SchreyerContext& ctx,
                                                 const RingPtr& ring) {
    std::vector<VectorPoly> syz;
    const size_t s = basis.size();
    const std::map<int, std::vector<size_t>> buckets = lead_buckets(basis);
    for (size_t i = 0; i < s; ++i) {
        const ModuleMono& li = basis[i].terms.front().mono;
        // Minimal generators of < lcm(e_i,e_j)/e_i : j > i, same component >.
        std::vector<std::pair<Exponent, size_t>> quots;
        for (size_t j = i + 1; j < s; ++j) {
            const ModuleMono& lj = basis[j].terms.front().mono;
            if (lj.comp != li.comp) continue;
            quots.emplace_back(exp_sub(exp_lcm(li.exp, lj.exp), li.exp), j);
        }
        std::vector<std::pair<Exponent, size_t>> kept;
        for (const auto& [q, j] : quots) {
            bool dominated = false;
            for (const auto& [q2, j2] : quots)
                if ((q2 != q && exp_divides(q2, q)) || (q2 == q && j2 < j)) {
                    dominated = true;
                    break;
                }
            if (!dominated) kept.emplace_back(q, j);
        }
        for (const auto& [qi, j] : kept) {
            const ModuleMono& lj = basis[j].terms.front().mono;
            Exponent l = exp_lcm(li.exp, lj.exp);
            Exponent qj = exp_sub(l, lj.exp);
            // S-pair of monic elements i and j.
            VectorPoly sp;
            {
                VectorPoly lhs;
                lhs.terms.reserve(basis[i].terms.size());
                for (const auto& t : basis[i].terms)
                    lhs.terms.push_back({{t.mono.comp, exp_add(t.mono.exp, qi)}, t.coeff});
                sp = detail::vp_sub_scaled(lhs, basis[j], qj, Rational(1), ctx);
            }
            std::map<size_t, Polynomial> q;
            VectorPoly rem = module_divide(std::move(sp), basis, buckets, ctx, ring, &q);
            if (!rem.is_zero())
                throw internal_error("S-pair of a Groebner basis did not reduce to zero");
            // sigma = x^qi E_i - x^qj E_j - sum q_k E_k.
            VectorPoly sigma;
            sigma.terms.push_back({{static_cast<int>(i), qi}, Rational(1)});
            sigma.terms.push_back({{static_cast<int>(j), qj}, Rational(-1)});
            for (const auto& [k, qk] : q)
                for (const auto& t : qk.terms())
                    sigma.terms.push_back({{static_cast<int>(k), t.exp}, -t.coeff});
            syz.push_back(std::move(sigma));
        }
    }
    return syz;
}

}  // namespace gkzcm
