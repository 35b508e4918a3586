// Weyl algebra D_n (relation d_i x_i = x_i d_i + 1) and its homogenization
// D_n^(h) (d_i x_i = x_i d_i + h^2, h central), with left Groebner bases
// under admissible weight orders and the passage to commutative initial
// ideals in S = k[x, d] (or S[h]).
//
// Elements are stored normally ordered: a term with exponent (a | b | l)
// means x^a d^b h^l. Under weights with u_i, v_i >= 0 and u_i + v_i > 0 the
// weight-refined order is a genuine term order and the commutator
// corrections in any product drop the weight strictly, so leading monomials
// multiply commutatively and division and Buchberger terminate by the usual
// Dickson argument. Weights outside that cone are rejected.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gkzcm/groebner.hpp"
#include "gkzcm/poly_io.hpp"
#include "gkzcm/polynomial.hpp"

namespace gkzcm {

struct WeylAlgebra {
    size_t n = 0;
    bool homogenized = false;

    size_t width() const { return 2 * n + (homogenized ? 1 : 0); }
    size_t x_pos(size_t i) const { return i; }
    size_t d_pos(size_t i) const { return n + i; }
    size_t h_pos() const { return 2 * n; }

    bool operator==(const WeylAlgebra& o) const {
        return n == o.n && homogenized == o.homogenized;
    }
    bool operator!=(const WeylAlgebra& o) const { return !(*this == o); }
};

inline WeylAlgebra weyl_algebra(size_t n) { return {n, false}; }
inline WeylAlgebra homogenized_weyl_algebra(size_t n) { return {n, true}; }

inline void check_same_algebra(const WeylAlgebra& a, const WeylAlgebra& b) {
    if (a != b) throw ring_mismatch_error("operands belong to different Weyl algebras");
}

// x-weights u and d-weights v (h always weight 0). Componentwise nonnegative
// with u_i + v_i > 0; see the header comment for why the nonnegativity is
// required here.
struct AdmissibleWeight {
    std::vector<long long> u, v;
};

inline AdmissibleWeight admissible_weight(std::vector<long long> u, std::vector<long long> v) {
    if (u.size() != v.size())
        throw dimension_error("weight vectors u and v differ in length");
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] + v[i] <= 0)
            throw unsupported_weight_error("weight needs u_i + v_i > 0 in every component");
        if (u[i] < 0 || v[i] < 0)
            throw unsupported_weight_error(
                "weights with negative components are not supported (termination is only "
                "guaranteed on the nonnegative cone)");
    }
    return {std::move(u), std::move(v)};
}

inline AdmissibleWeight bernstein_weight(size_t n) {
    return {std::vector<long long>(n, 1), std::vector<long long>(n, 1)};
}

// The weight-refined term order on normally ordered exponents.
inline MonomialOrder weyl_order(const WeylAlgebra& alg, const AdmissibleWeight& w) {
    if (w.u.size() != alg.n)
        throw dimension_error("weight length differs from the algebra's variable count");
    std::vector<Rational> wt(alg.width(), Rational(0));
    for (size_t i = 0; i < alg.n; ++i) {
        wt[alg.x_pos(i)] = rational_of(w.u[i]);
        wt[alg.d_pos(i)] = rational_of(w.v[i]);
    }
    return MonomialOrder::weighted(std::move(wt));
}

class WeylElement {
  public:
    WeylElement() = default;
    explicit WeylElement(WeylAlgebra alg) : alg_(alg) {}

    static WeylElement zero(const WeylAlgebra& alg) { return WeylElement(alg); }

    static WeylElement constant(const WeylAlgebra& alg, const Rational& c) {
        WeylElement p(alg);
        if (c != 0) p.terms_.emplace(Exponent(alg.width(), 0), c);
        return p;
    }

    static WeylElement monomial(const WeylAlgebra& alg, Exponent e, const Rational& c = 1) {
        if (e.size() != alg.width())
            throw dimension_error("exponent length differs from the algebra width");
        WeylElement p(alg);
        if (c != 0) p.terms_.emplace(std::move(e), c);
        return p;
    }

    // Bulk construction; duplicate exponents merge and zero coefficients drop.
    static WeylElement from_terms(const WeylAlgebra& alg,
                                  std::vector<std::pair<Exponent, Rational>> ts) {
        WeylElement p(alg);
        for (auto& [e, c] : ts) {
            if (e.size() != alg.width())
                throw dimension_error("exponent length differs from the algebra width");
            add_term(p.terms_, std::move(e), std::move(c));
        }
        return p;
    }

    static WeylElement x(const WeylAlgebra& alg, size_t i) { return var(alg, alg.x_pos(i), i); }
    static WeylElement d(const WeylAlgebra& alg, size_t i) { return var(alg, alg.d_pos(i), i); }
    static WeylElement h(const WeylAlgebra& alg) {
        if (!alg.homogenized) throw validation_error("h only exists in the homogenized algebra");
        Exponent e(alg.width(), 0);
        e[alg.h_pos()] = 1;
        return monomial(alg, std::move(e));
    }

    const WeylAlgebra& algebra() const { return alg_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && is_zero_exponent(terms_.begin()->first));
    }

    WeylElement operator-() const {
        WeylElement p(alg_);
        for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
        return p;
    }

    WeylElement operator+(const WeylElement& o) const { return combined(o, 1); }
    WeylElement operator-(const WeylElement& o) const { return combined(o, -1); }

    WeylElement operator*(const Rational& c) const {
        WeylElement p(alg_);
        if (c == 0) return p;
        for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
        return p;
    }

    // Noncommutative product, renormalized to normal order:
    //   (x^a d^b h^l)(x^A d^B h^L) =
    //     sum_k prod_i C(b_i,k_i) C(A_i,k_i) k_i! x^{a+A-k} d^{b+B-k} h^{l+L+2|k|}
    // with k ranging below min(b, A) componentwise; in D the h-exponent is
    // dropped (the relation contributes 1 instead of h^2).
    WeylElement operator*(const WeylElement& o) const {
        check_same_algebra(alg_, o.alg_);
        WeylElement out(alg_);
        const size_t n = alg_.n;
        for (const auto& [e1, c1] : terms_) {
            for (const auto& [e2, c2] : o.terms_) {
                Exponent k(n, 0);
                auto rec = [&](auto&& self, size_t i, Rational mult) -> void {
                    if (i == n) {
                        Exponent e(alg_.width(), 0);
                        long long total_k = 0;
                        for (size_t j = 0; j < n; ++j) {
                            e[j] = e1[j] + e2[j] - k[j];
                            e[n + j] = e1[n + j] + e2[n + j] - k[j];
                            total_k += k[j];
                        }
                        if (alg_.homogenized)
                            e[alg_.h_pos()] = e1[alg_.h_pos()] + e2[alg_.h_pos()] +
                                              static_cast<int>(2 * total_k);
                        add_term(out.terms_, std::move(e), c1 * c2 * mult);
                        return;
                    }
                    int cap = std::min(e1[n + i], e2[i]);
                    for (int ki = 0; ki <= cap; ++ki) {
                        k[i] = ki;
                        Rational m = mult;
                        if (ki > 0)
                            m *= Rational(binomial(e1[n + i], ki) * binomial(e2[i], ki) *
                                          factorial(ki));
                        self(self, i + 1, std::move(m));
                    }
                    k[i] = 0;
                };
                rec(rec, 0, Rational(1));
            }
        }
        return out;
    }

    bool operator==(const WeylElement& o) const { return alg_ == o.alg_ && terms_ == o.terms_; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }

    std::pair<Exponent, Rational> lead(const MonomialOrder& order) const {
        if (terms_.empty()) throw undefined_input_error("leading term of zero");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (order.compare(it->first, best->first) > 0) best = it;
        return {best->first, best->second};
    }

  private:
    static WeylElement var(const WeylAlgebra& alg, size_t pos, size_t i) {
        if (i >= alg.n) throw dimension_error("variable index out of range");
        Exponent e(alg.width(), 0);
        e[pos] = 1;
        return monomial(alg, std::move(e));
    }

    static void add_term(std::map<Exponent, Rational>& terms, Exponent e, Rational c) {
        if (c == 0) return;
        auto [it, fresh] = terms.try_emplace(std::move(e), std::move(c));
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    WeylElement combined(const WeylElement& o, int sign) const {
        check_same_algebra(alg_, o.alg_);
        WeylElement p = *this;
        for (const auto& [e, c] : o.terms_) add_term(p.terms_, e, sign * c);
        return p;
    }

    WeylAlgebra alg_;
    std::map<Exponent, Rational> terms_;
};

inline WeylElement operator*(const Rational& c, const WeylElement& p) { return p * c; }

struct WeylIdeal {
    WeylAlgebra alg;
    std::vector<WeylElement> gens;

    WeylIdeal() = default;
    WeylIdeal(WeylAlgebra a, std::vector<WeylElement> g) : alg(a) {
        gens.reserve(g.size());
        for (auto& p : g) {
            if (p.is_zero()) continue;
            check_same_algebra(alg, p.algebra());
            gens.push_back(std::move(p));
        }
    }
};

namespace detail {

inline WeylElement left_monomial_multiple(const WeylAlgebra& alg, const Exponent& q,
                                          const Rational& c, const WeylElement& g) {
    return WeylElement::monomial(alg, q, c) * g;
}

// The heap reduction below processes pending monomials strictly downward: a
// reduction step replaces the popped monomial with the strictly smaller
// non-lead part of the left multiple, so every monomial is examined exactly
// once and surviving ones are final. This matches reducing the greatest
// reducible monomial of a working polynomial in place, without the per-step
// copies. Among applicable divisors, the one with the fewest terms wins
// (ties to the lowest index): each step then injects the fewest new
// monomials. Any divisor choice is sound, and the results the callers rely
// on do not depend on it: an S-pair remainder of zero under one division
// run certifies membership of the initial ideal, and the reduced basis a
// Groebner computation returns is the unique one for the ideal and order.
//
// Two interchangeable engines: when the order is weight-then-degrevlex (or
// plain degrevlex) and all exponent data fits the field widths, monomials are
// packed into a single 128-bit integer whose unsigned comparison realizes the
// order, making heap maintenance branch-cheap; otherwise, or on a range
// overflow, the generic engine compares exponent vectors directly.

// Packed monomial key, most significant field first: the integral weight,
// the total degree, then CAP - e_i from the last variable down to the first.
// Lexicographic comparison of the fields is exactly weight, then degree,
// then reverse lexicographic with the smaller trailing exponent winning.
struct WeylPackedLayout {
    size_t width = 0;
    size_t bits = 0;       // per exponent field
    int cap = 0;           // largest storable exponent
    const long long* iw = nullptr;  // weight vector; total degree when null

    static std::optional<WeylPackedLayout> plan(const MonomialOrder& order, size_t width) {
        WeylPackedLayout L;
        L.width = width;
        L.bits = std::min<size_t>(16, 96 / std::max<size_t>(width, 1));
        if (L.bits < 4) return std::nullopt;
        L.cap = (1 << L.bits) - 1;
        if (order.kind == MonomialOrder::Kind::degrevlex) return L;
        if (order.kind != MonomialOrder::Kind::weighted ||
            order.tie != MonomialOrder::Kind::degrevlex || order.iweights.size() != width)
            return std::nullopt;
        for (long long wi : order.iweights)
            if (wi < 0) return std::nullopt;
        L.iw = order.iweights.data();
        return L;
    }

    bool pack(const int* e, unsigned __int128& out) const {
        long long W = 0, D = 0;
        for (size_t i = 0; i < width; ++i) {
            D += e[i];
            if (iw) W += iw[i] * e[i];
        }
        if (!iw) W = D;
        if (W > 0xffff || D > 0xffff) return false;
        unsigned __int128 p =
            (static_cast<unsigned __int128>(W) << 16) | static_cast<unsigned long long>(D);
        for (size_t i = width; i-- > 0;) {
            if (e[i] > cap) return false;
            p = (p << bits) | static_cast<unsigned>(cap - e[i]);
        }
        out = p;
        return true;
    }

    void unpack(unsigned __int128 p, int* e) const {
        for (size_t i = 0; i < width; ++i) {
            e[i] = cap - static_cast<int>(p & static_cast<unsigned>(cap));
            p >>= bits;
        }
    }
};

// 64-bit divisibility prescreen: bit (i, t) is set when e_i >= t, so a lead
// with a bit outside the candidate's mask cannot divide it.
inline unsigned long long weyl_div_mask(const int* e, size_t width) {
    const int bpv = static_cast<int>(std::min<size_t>(8, 64 / std::max<size_t>(width, 1)));
    unsigned long long m = 0;
    int bit = 0;
    for (size_t i = 0; i < width; ++i)
        for (int t = 1; t <= bpv; ++t, ++bit)
            if (e[i] >= t) m |= 1ull << bit;
    return m;
}

inline WeylElement weyl_reduce_generic(const WeylAlgebra& alg, const WeylElement& P,
                                       const std::vector<WeylElement>& G,
                                       const std::vector<std::pair<Exponent, Rational>>& leads,
                                       const MonomialOrder& order, size_t skip) {
    const size_t n = alg.n;
    const size_t width = alg.width();

    // Fast primary key in front of the full comparison.
    const bool int_weighted =
        order.kind == MonomialOrder::Kind::weighted && !order.iweights.empty();
    const bool by_degree = order.kind == MonomialOrder::Kind::degrevlex;
    auto key_of = [&](const Exponent& e) -> long long {
        if (int_weighted) {
            long long s = 0;
            for (size_t i = 0; i < e.size(); ++i) s += order.iweights[i] * e[i];
            return s;
        }
        return by_degree ? total_degree(e) : 0;
    };

    struct Entry {
        long long key;
        Exponent e;
        Rational c;
    };
    auto less = [&](const Entry& a, const Entry& b) {
        if (a.key != b.key) return a.key < b.key;
        return order.compare(a.e, b.e) < 0;
    };

    std::vector<Entry> heap;
    size_t cap = size_t(1) << 16;
    auto push = [&](Exponent e, Rational c) {
        if (c == 0) return;
        heap.push_back({key_of(e), std::move(e), std::move(c)});
        std::push_heap(heap.begin(), heap.end(), less);
        if (heap.size() <= cap) return;
        std::sort(heap.begin(), heap.end(), [&](const Entry& a, const Entry& b) {
            return less(b, a);
        });
        size_t w = 0;
        for (size_t r = 0; r < heap.size();) {
            size_t r2 = r + 1;
            while (r2 < heap.size() && heap[r2].e == heap[r].e) {
                heap[r].c += heap[r2].c;
                ++r2;
            }
            if (heap[r].c != 0) {
                if (w != r) heap[w] = std::move(heap[r]);
                ++w;
            }
            r = r2;
        }
        heap.resize(w);
        std::make_heap(heap.begin(), heap.end(), less);
        cap = std::max(cap, heap.size() * 4);
    };

    std::vector<unsigned long long> lead_mask;
    lead_mask.reserve(leads.size());
    for (const auto& [e, c] : leads) lead_mask.push_back(weyl_div_mask(e.data(), width));
    std::vector<size_t> nterms;
    nterms.reserve(G.size());
    for (const auto& g : G) nterms.push_back(g.terms().size());

    for (const auto& [e, c] : P.terms()) push(e, c);
    std::vector<std::pair<Exponent, Rational>> out;
    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), less);
        Entry top = std::move(heap.back());
        heap.pop_back();
        while (!heap.empty() && heap.front().e == top.e) {
            std::pop_heap(heap.begin(), heap.end(), less);
            top.c += heap.back().c;
            heap.pop_back();
        }
        if (top.c == 0) continue;
        const unsigned long long em = weyl_div_mask(top.e.data(), width);
        size_t hit = G.size();
        for (size_t i = 0; i < G.size(); ++i) {
            if (i == skip || (lead_mask[i] & ~em) != 0) continue;
            if ((hit == G.size() || nterms[i] < nterms[hit]) &&
                exp_divides(leads[i].first, top.e))
                hit = i;
        }
        if (hit == G.size()) {
            out.emplace_back(std::move(top.e), std::move(top.c));
            continue;
        }
        const Exponent& le = leads[hit].first;
        const Exponent q = exp_sub(top.e, le);
        const Rational factor = -top.c / leads[hit].second;
        for (const auto& [E, C] : G[hit].terms()) {
            const bool is_lead = (E == le);
            bool any_cap = false;
            for (size_t i = 0; i < n && !any_cap; ++i)
                if (q[n + i] > 0 && E[i] > 0) any_cap = true;
            if (!any_cap) {
                if (is_lead) continue;
                Exponent eo(width);
                for (size_t t = 0; t < width; ++t) eo[t] = q[t] + E[t];
                push(std::move(eo), factor * C);
                continue;
            }
            Exponent k(n, 0);
            auto rec = [&](auto&& self, size_t i, Rational mult, long long tk) -> void {
                if (i == n) {
                    if (is_lead && tk == 0) return;
                    Exponent eo2(width, 0);
                    for (size_t j = 0; j < n; ++j) {
                        eo2[j] = q[j] + E[j] - k[j];
                        eo2[n + j] = q[n + j] + E[n + j] - k[j];
                    }
                    if (alg.homogenized)
                        eo2[alg.h_pos()] =
                            q[alg.h_pos()] + E[alg.h_pos()] + static_cast<int>(2 * tk);
                    push(std::move(eo2), std::move(mult));
                    return;
                }
                int cap_i = std::min(q[n + i], E[i]);
                for (int ki = 0; ki <= cap_i; ++ki) {
                    k[i] = ki;
                    Rational m = mult;
                    if (ki > 0)
                        m *= Rational(binomial(q[n + i], ki) * binomial(E[i], ki) * factorial(ki));
                    self(self, i + 1, std::move(m), tk + ki);
                }
                k[i] = 0;
            };
            rec(rec, 0, factor * C, 0);
        }
    }
    return WeylElement::from_terms(alg, std::move(out));
}

// Reusable reduction context over a borrowed basis. The basis terms are
// mirrored into flat arrays once (and appended on sync() as the basis grows),
// so repeated reductions against the same divisors, Buchberger's main loop
// and the all-pairs verification in particular, avoid re-walking the term
// maps. Packed keys drive the heap when the layout supports them; any field
// overflow abandons the attempt and the generic engine redoes the call.
class WeylReducer {
  public:
    static constexpr size_t npos = static_cast<size_t>(-1);

    WeylReducer(const WeylAlgebra& alg, const MonomialOrder& order,
                const std::vector<WeylElement>& G,
                const std::vector<std::pair<Exponent, Rational>>& leads)
        : alg_(alg), order_(order), G_(&G), leads_(&leads) {
        if (alg.width() <= 32) layout_ = WeylPackedLayout::plan(order, alg.width());
        sync();
    }

    // Mirror basis elements appended since construction or the last sync.
    void sync() {
        for (size_t i = flat_.size(); i < G_->size(); ++i)
            flat_.push_back(flatten((*G_)[i], (*leads_)[i].first));
        for (size_t i = masks_.size(); i < leads_->size(); ++i)
            masks_.push_back(weyl_div_mask((*leads_)[i].first.data(), alg_.width()));
    }

    WeylElement reduce(const WeylElement& p, size_t skip = npos) {
        if (layout_) {
            heap_.clear();
            overflow_ = false;
            for (const auto& [e, c] : p.terms()) push(e.data(), c);
            if (!overflow_) {
                auto r = run(skip);
                if (r) return *r;
            }
        }
        return weyl_reduce_generic(alg_, p, *G_, *leads_, order_, skip);
    }

    // Normal form of the S-element of basis entries i and j, seeded straight
    // into the heap; the two lcm lead terms cancel on the first pop.
    WeylElement spair_remainder(size_t i, size_t j) {
        const Exponent& li = (*leads_)[i].first;
        const Exponent& lj = (*leads_)[j].first;
        if (layout_) {
            heap_.clear();
            overflow_ = false;
            const size_t width = alg_.width();
            int qi[32], qj[32];
            for (size_t t = 0; t < width; ++t) {
                int l = std::max(li[t], lj[t]);
                qi[t] = l - li[t];
                qj[t] = l - lj[t];
            }
            emit(qi, Rational(1), i, false);
            emit(qj, Rational(-1), j, false);
            if (!overflow_) {
                auto r = run(npos);
                if (r) return *r;
            }
        }
        Exponent l = exp_lcm(li, lj);
        WeylElement s = left_monomial_multiple(alg_, exp_sub(l, li), 1, (*G_)[i]) -
                        left_monomial_multiple(alg_, exp_sub(l, lj), 1, (*G_)[j]);
        return weyl_reduce_generic(alg_, s, *G_, *leads_, order_, npos);
    }

  private:
    struct FlatElem {
        std::vector<int> exps;        // nterms x width, row major
        std::vector<Rational> coeffs;
        size_t nterms = 0;
        size_t lead_at = 0;
    };
    struct Entry {
        unsigned __int128 key;
        Rational c;
    };
    static bool less(const Entry& a, const Entry& b) { return a.key < b.key; }

    FlatElem flatten(const WeylElement& g, const Exponent& lead) const {
        FlatElem f;
        f.nterms = g.terms().size();
        f.exps.reserve(f.nterms * alg_.width());
        f.coeffs.reserve(f.nterms);
        size_t t = 0;
        for (const auto& [e, c] : g.terms()) {
            if (e == lead) f.lead_at = t;
            f.exps.insert(f.exps.end(), e.begin(), e.end());
            f.coeffs.push_back(c);
            ++t;
        }
        return f;
    }

    void push(const int* e, Rational c) {
        if (c == 0) return;
        unsigned __int128 key;
        if (!layout_->pack(e, key)) {
            overflow_ = true;
            return;
        }
        heap_.push_back({key, std::move(c)});
        std::push_heap(heap_.begin(), heap_.end(), less);
        if (heap_.size() <= cap_) return;
        // Duplicates accumulate lazily; merge them when the heap outgrows
        // its budget so memory stays proportional to distinct monomials.
        std::sort(heap_.begin(), heap_.end(), [](const Entry& a, const Entry& b) {
            return less(b, a);
        });
        size_t w = 0;
        for (size_t r = 0; r < heap_.size();) {
            size_t r2 = r + 1;
            while (r2 < heap_.size() && heap_[r2].key == heap_[r].key) {
                heap_[r].c += heap_[r2].c;
                ++r2;
            }
            if (heap_[r].c != 0) {
                if (w != r) heap_[w] = std::move(heap_[r]);
                ++w;
            }
            r = r2;
        }
        heap_.resize(w);
        std::make_heap(heap_.begin(), heap_.end(), less);
        cap_ = std::max(cap_, heap_.size() * 4);
    }

    // Pushes factor * x^q-part d^q-part h^q-part * basis[idx] termwise; with
    // cancel_lead, the single contraction-free lead product is left out (it
    // cancels the monomial being reduced exactly).
    void emit(const int* q, const Rational& factor, size_t idx, bool cancel_lead) {
        const FlatElem& g = flat_[idx];
        const size_t n = alg_.n, width = alg_.width();
        const bool plus_one = factor == 1, minus_one = factor == -1;
        int eo[32];
        for (size_t t = 0; t < g.nterms && !overflow_; ++t) {
            const int* E = g.exps.data() + t * width;
            const Rational& C = g.coeffs[t];
            const bool is_lead = cancel_lead && t == g.lead_at;
            bool any_cap = false;
            for (size_t i = 0; i < n && !any_cap; ++i)
                if (q[n + i] > 0 && E[i] > 0) any_cap = true;
            if (!any_cap) {
                if (is_lead) continue;
                for (size_t v = 0; v < width; ++v) eo[v] = q[v] + E[v];
                if (plus_one)
                    push(eo, C);
                else if (minus_one)
                    push(eo, -C);
                else
                    push(eo, factor * C);
                continue;
            }
            int k[32] = {0};
            auto rec = [&](auto&& self, size_t i, const Rational& mult, long long tk) -> void {
                if (i == n) {
                    if (is_lead && tk == 0) return;
                    for (size_t j = 0; j < n; ++j) {
                        eo[j] = q[j] + E[j] - k[j];
                        eo[n + j] = q[n + j] + E[n + j] - k[j];
                    }
                    if (alg_.homogenized)
                        eo[alg_.h_pos()] =
                            q[alg_.h_pos()] + E[alg_.h_pos()] + static_cast<int>(2 * tk);
                    push(eo, mult);
                    return;
                }
                int cap_i = std::min(q[n + i], E[i]);
                k[i] = 0;
                self(self, i + 1, mult, tk);
                for (int ki = 1; ki <= cap_i; ++ki) {
                    k[i] = ki;
                    self(self, i + 1,
                         mult * Rational(binomial(q[n + i], ki) * binomial(E[i], ki) *
                                         factorial(ki)),
                         tk + ki);
                }
                k[i] = 0;
            };
            if (plus_one)
                rec(rec, 0, C, 0);
            else if (minus_one)
                rec(rec, 0, -C, 0);
            else
                rec(rec, 0, factor * C, 0);
        }
    }

    std::optional<WeylElement> run(size_t skip) {
        const size_t width = alg_.width();
        out_.clear();
        int ue[32], q[32];
        while (!heap_.empty()) {
            std::pop_heap(heap_.begin(), heap_.end(), less);
            Entry top = std::move(heap_.back());
            heap_.pop_back();
            while (!heap_.empty() && heap_.front().key == top.key) {
                std::pop_heap(heap_.begin(), heap_.end(), less);
                top.c += heap_.back().c;
                heap_.pop_back();
            }
            if (top.c == 0) continue;
            layout_->unpack(top.key, ue);
            const unsigned long long em = weyl_div_mask(ue, width);
            size_t hit = G_->size();
            for (size_t i = 0; i < G_->size(); ++i) {
                if (i == skip || (masks_[i] & ~em) != 0) continue;
                if (hit != G_->size() && flat_[i].nterms >= flat_[hit].nterms) continue;
                const Exponent& li = (*leads_)[i].first;
                size_t t = 0;
                while (t < width && li[t] <= ue[t]) ++t;
                if (t == width) hit = i;
            }
            if (hit == G_->size()) {
                out_.emplace_back(Exponent(ue, ue + width), std::move(top.c));
                continue;
            }
            const Exponent& le = (*leads_)[hit].first;
            for (size_t t = 0; t < width; ++t) q[t] = ue[t] - le[t];
            const Rational& lc = (*leads_)[hit].second;
            Rational factor = -top.c;
            if (lc != 1) factor /= lc;
            emit(q, factor, hit, true);
            if (overflow_) return std::nullopt;
        }
        return WeylElement::from_terms(alg_, std::move(out_));
    }

    WeylAlgebra alg_;
    MonomialOrder order_;
    const std::vector<WeylElement>* G_;
    const std::vector<std::pair<Exponent, Rational>>* leads_;
    std::optional<WeylPackedLayout> layout_;
    std::vector<FlatElem> flat_;
    std::vector<unsigned long long> masks_;
    std::vector<Entry> heap_;
    std::vector<std::pair<Exponent, Rational>> out_;
    size_t cap_ = size_t(1) << 16;
    bool overflow_ = false;
};

// One-shot reduction over a divisor sequence whose leading terms are
// precomputed. `skip`, when set, hides that divisor index. Both engines
// produce the identical normal form; the packed one merely encodes the
// comparisons.
inline WeylElement reduce_with_leads(const WeylAlgebra& alg, const WeylElement& P,
                                     const std::vector<WeylElement>& G,
                                     const std::vector<std::pair<Exponent, Rational>>& leads,
                                     const MonomialOrder& order,
                                     size_t skip = static_cast<size_t>(-1)) {
    return WeylReducer(alg, order, G, leads).reduce(P, skip);
}

}  // namespace detail

// Left normal form: repeatedly cancels the greatest monomial divisible (as a
// commutative monomial) by some leading monomial of G, using a left monomial
// multiple. Deterministic: the divisor with the fewest terms wins, ties to
// the lowest index.
inline WeylElement weyl_normal_form(const WeylElement& P, const std::vector<WeylElement>& G,
                                    const AdmissibleWeight& w) {
    if (G.empty()) return P;
    const WeylAlgebra& alg = G.front().algebra();
    check_same_algebra(P.algebra(), alg);
    MonomialOrder order = weyl_order(alg, w);
    std::vector<std::pair<Exponent, Rational>> leads;
    leads.reserve(G.size());
    for (const auto& g : G) {
        if (g.is_zero()) throw undefined_input_error("zero element in a divisor basis");
        check_same_algebra(g.algebra(), alg);
        leads.push_back(g.lead(order));
    }

    return detail::reduce_with_leads(alg, P, G, leads, order);
}

// Reduced left Groebner basis under the w-refined order. The coprime-lead
// pair criterion is unsound here and is not used; see the loop comment for
// why the chain criterion still applies.
inline std::vector<WeylElement> weyl_buchberger(const WeylIdeal& I, const AdmissibleWeight& w) {
    MonomialOrder order = weyl_order(I.alg, w);
    auto wdeg = [&](const Exponent& e) {
        long long s = 0;
        for (size_t i = 0; i < I.alg.n; ++i)
            s += w.u[i] * e[I.alg.x_pos(i)] + w.v[i] * e[I.alg.d_pos(i)];
        return s;
    };
    std::vector<WeylElement> G;
    std::vector<std::pair<Exponent, Rational>> leads;
    for (const auto& g : I.gens) {
        G.push_back(g * (Rational(1) / g.lead(order).second));
        leads.push_back(G.back().lead(order));
    }

    // Lightest S-pair lcm first to keep the intermediate elements small.
    // The coprime-lead criterion stays out (commutators break it), but the
    // chain criterion survives: leading monomials still multiply
    // commutatively, so when some other lead divides lcm(i,j) and both
    // linking pairs are treated, the (i,j) syzygy is a combination of
    // theirs. Treated = popped, so the justification is well-founded by pop
    // order; the verification pass below re-checks every pair of the final
    // basis with no skipping.
    std::set<std::tuple<long long, size_t, size_t>> pending;
    std::set<std::pair<size_t, size_t>> done;
    auto queue_pair = [&](size_t i, size_t j) {
        pending.insert({wdeg(exp_lcm(leads[i].first, leads[j].first)), i, j});
    };
    auto treated = [&](size_t a, size_t b) {
        return done.count({std::min(a, b), std::max(a, b)}) != 0;
    };
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) queue_pair(i, j);
    detail::WeylReducer red(I.alg, order, G, leads);
    while (!pending.empty()) {
        auto [key, i, j] = *pending.begin();
        pending.erase(pending.begin());
        done.insert({i, j});
        Exponent l = exp_lcm(leads[i].first, leads[j].first);
        bool chained = false;
        for (size_t k = 0; k < G.size() && !chained; ++k)
            if (k != i && k != j && exp_divides(leads[k].first, l) && treated(i, k) &&
                treated(j, k))
                chained = true;
        if (chained) continue;
        WeylElement rem = red.spair_remainder(i, j);
        if (rem.is_zero()) continue;
        G.push_back(rem * (Rational(1) / rem.lead(order).second));
        leads.push_back(G.back().lead(order));
        red.sync();
        for (size_t k = 0; k + 1 < G.size(); ++k) queue_pair(k, G.size() - 1);
    }

    // Minimalize by leading-monomial divisibility, then tail-reduce.
    std::vector<WeylElement> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        Exponent li = G[i].lead(order).first;
        bool redundant = false;
        for (size_t j = 0; j < G.size() && !redundant; ++j) {
            if (j == i) continue;
            Exponent lj = G[j].lead(order).first;
            if (lj != li ? exp_divides(lj, li) : j < i) redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    std::vector<std::pair<Exponent, Rational>> mleads;
    for (const auto& g : minimal) mleads.push_back(g.lead(order));
    detail::WeylReducer tail(I.alg, order, minimal, mleads);
    std::vector<WeylElement> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        WeylElement r = tail.reduce(minimal[i], i);
        reduced.push_back(r * (Rational(1) / r.lead(order).second));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const WeylElement& a, const WeylElement& b) {
        return order.compare(a.lead(order).first, b.lead(order).first) < 0;
    });

    if (config::verify_groebner_output.load()) {
        std::vector<std::pair<Exponent, Rational>> rl;
        for (const auto& g : reduced) rl.push_back(g.lead(order));
        detail::WeylReducer check(I.alg, order, reduced, rl);
        for (size_t i = 0; i < reduced.size(); ++i)
            for (size_t j = i + 1; j < reduced.size(); ++j)
                if (!check.spair_remainder(i, j).is_zero())
                    throw internal_error("weyl groebner verification failed");
        for (const auto& g : I.gens)
            if (!check.reduce(g).is_zero())
                throw internal_error("weyl groebner verification failed");
    }
    return reduced;
}

// Commutative image ring S = k[x1..xn, d1..dn] (plus h when homogenized),
// standard grading.
inline RingPtr commutative_ring(const WeylAlgebra& alg) {
    std::vector<std::string> names;
    for (size_t i = 1; i <= alg.n; ++i) names.push_back("x" + std::to_string(i));
    for (size_t i = 1; i <= alg.n; ++i) names.push_back("d" + std::to_string(i));
    if (alg.homogenized) names.push_back("h");
    return ring_ptr(PolyRing::standard(std::move(names)));
}

inline Polynomial to_commutative(const WeylElement& P, const RingPtr& ring,
                                 MonomialOrder order = MonomialOrder::degrevlex()) {
    if (ring->nvars() != P.algebra().width())
        throw dimension_error("ring width differs from the algebra width");
    std::vector<Term> ts;
    ts.reserve(P.terms().size());
    for (const auto& [e, c] : P.terms()) ts.push_back({e, c});
    return Polynomial(ring, std::move(ts), std::move(order));
}

inline WeylElement from_commutative(const Polynomial& f, const WeylAlgebra& alg) {
    if (f.ring()->nvars() != alg.width())
        throw dimension_error("ring width differs from the algebra width");
    WeylElement p = WeylElement::zero(alg);
    for (const auto& t : f.terms()) p = p + WeylElement::monomial(alg, t.exp, t.coeff);
    return p;
}

// Terms of maximal w-weight, read as a commutative polynomial in S.
inline Polynomial weyl_initial_form(const WeylElement& P, const AdmissibleWeight& w,
                                    const RingPtr& ring) {
    if (P.is_zero()) throw undefined_input_error("initial form of zero");
    const WeylAlgebra& alg = P.algebra();
    auto weight = [&](const Exponent& e) {
        long long s = 0;
        for (size_t i = 0; i < alg.n; ++i)
            s += w.u[i] * e[alg.x_pos(i)] + w.v[i] * e[alg.d_pos(i)];
        return s;
    };
    long long best = 0;
    bool first = true;
    for (const auto& [e, c] : P.terms()) {
        long long s = weight(e);
        if (first || s > best) best = s;
        first = false;
    }
    std::vector<Term> keep;
    for (const auto& [e, c] : P.terms())
        if (weight(e) == best) keep.push_back({e, c});
    return Polynomial(ring, std::move(keep));
}

// gr^w(D/I) presented as S / result: commutative ideal generated by the
// w-initial forms of a left Groebner basis of I.
inline Ideal gr_initial_ideal(const WeylIdeal& I, const AdmissibleWeight& w) {
    RingPtr S = commutative_ring(I.alg);
    std::vector<Polynomial> forms;
    for (const auto& g : weyl_buchberger(I, w)) forms.push_back(weyl_initial_form(g, w, S));
    return Ideal(S, std::move(forms));
}

// Total degree |a| + |b| + l used by homogenization (deg h = 1).
inline long long weyl_total_degree(const WeylElement& P) {
    long long d = -1;
    for (const auto& [e, c] : P.terms()) d = std::max(d, total_degree(e));
    return d;
}

inline WeylElement homogenize(const WeylElement& P) {
    if (P.algebra().homogenized)
        throw validation_error("element is already in the homogenized algebra");
    WeylAlgebra alg = homogenized_weyl_algebra(P.algebra().n);
    WeylElement out = WeylElement::zero(alg);
    long long top = weyl_total_degree(P);
    for (const auto& [e, c] : P.terms()) {
        Exponent ee(alg.width(), 0);
        for (size_t i = 0; i < e.size(); ++i) ee[i] = e[i];
        ee[alg.h_pos()] = static_cast<int>(top - total_degree(e));
        out = out + WeylElement::monomial(alg, std::move(ee), c);
    }
    return out;
}

inline WeylElement dehomogenize(const WeylElement& P) {
    if (!P.algebra().homogenized)
        throw validation_error("element is not in the homogenized algebra");
    WeylAlgebra alg = weyl_algebra(P.algebra().n);
    WeylElement out = WeylElement::zero(alg);
    for (const auto& [e, c] : P.terms()) {
        Exponent ee(e.begin(), e.begin() + static_cast<long>(alg.width()));
        out = out + WeylElement::monomial(alg, std::move(ee), c);
    }
    return out;
}

// Homogenization of a left ideal: homogenize a Groebner basis under a
// degree-compatible order. The Bernstein weight refined by degrevlex is
// degree-compatible, so its basis qualifies.
inline WeylIdeal homogenize_ideal(const WeylIdeal& I) {
    std::vector<WeylElement> gens;
    for (const auto& g : weyl_buchberger(I, bernstein_weight(I.alg.n)))
        gens.push_back(homogenize(g));
    return WeylIdeal(homogenized_weyl_algebra(I.alg.n), std::move(gens));
}

// --- text input and output -------------------------------------------------

// Parses with noncommuting semantics: factors of a term multiply left to
// right in the Weyl algebra, so "d1*x1" is x1 d1 + 1 while "x1*d1" is x1 d1.
inline WeylElement parse_weyl(const WeylAlgebra& alg, const std::string& text) {
    RingPtr S = commutative_ring(alg);
    detail::PolyLexer lx(text);
    if (lx.done()) throw validation_error("empty weyl element text");
    WeylElement sum = WeylElement::zero(alg);
    bool negate = false;
    if (lx.accept('-'))
        negate = true;
    else
        lx.accept('+');
    while (true) {
        WeylElement term = WeylElement::constant(alg, negate ? -1 : 1);
        bool expect_factor = true;
        while (expect_factor) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                term = term * parse_rational(lx.number());
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string v = lx.name();
                int j = S->var_index(v);
                if (j < 0)
                    throw validation_error("unknown variable '" + v + "' in weyl text");
                int e = 1;
                if (lx.accept('^')) {
                    std::string n = lx.number();
                    if (n.empty() || n.find('/') != std::string::npos)
                        throw validation_error("malformed exponent in weyl text");
                    e = std::stoi(n);
                    if (e < 0) throw validation_error("negative exponent in weyl text");
                }
                Exponent ex(alg.width(), 0);
                ex[static_cast<size_t>(j)] = e;
                term = term * WeylElement::monomial(alg, std::move(ex));
            } else {
                throw validation_error("expected a factor in weyl text");
            }
            expect_factor = lx.accept('*');
        }
        sum = sum + term;
        if (lx.done()) break;
        if (lx.accept('+'))
            negate = false;
        else if (lx.accept('-'))
            negate = true;
        else
            throw validation_error("expected + or - between terms in weyl text");
    }
    return sum;
}

inline std::string to_string(const WeylElement& P) {
    return to_string(to_commutative(P, commutative_ring(P.algebra())));
}

}  // namespace gkzcm
