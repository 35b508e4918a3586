// Sparse multivariate polynomials over Q.
//
// A Polynomial is immutable after construction: terms are strictly
// descending under the order it was built with and carry no zero
// coefficients. sorted_under() re-sorts into another order on demand;
// equality and hashing are order-insensitive.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gkzcm/exponent.hpp"
#include "gkzcm/numeric.hpp"
#include "gkzcm/order.hpp"
#include "gkzcm/ring.hpp"

namespace gkzcm {

struct Term {
    Exponent exp;
    Rational coeff;
};

class Polynomial {
  public:
    Polynomial() = default;

    explicit Polynomial(RingPtr ring, MonomialOrder order = MonomialOrder::degrevlex())
        : ring_(std::move(ring)), order_(std::move(order)) {}

    // Normalizes: sorts descending, combines equal exponents, drops zeros.
    Polynomial(RingPtr ring, std::vector<Term> terms,
               MonomialOrder order = MonomialOrder::degrevlex())
        : ring_(std::move(ring)), order_(std::move(order)) {
        for (auto& t : terms)
            if (t.exp.size() != ring_->nvars())
                throw dimension_error("term exponent length differs from ring variable count");
        std::sort(terms.begin(), terms.end(),
                  [&](const Term& a, const Term& b) { return order_.compare(a.exp, b.exp) > 0; });
        terms_.reserve(terms.size());
        for (auto& t : terms) {
            if (!terms_.empty() && terms_.back().exp == t.exp)
                terms_.back().coeff += t.coeff;
            else
                terms_.push_back(std::move(t));
            if (!terms_.empty() && terms_.back().coeff == 0) terms_.pop_back();
        }
    }

    static Polynomial zero(RingPtr ring, MonomialOrder order = MonomialOrder::degrevlex()) {
        return Polynomial(std::move(ring), std::move(order));
    }

    static Polynomial constant(RingPtr ring, const Rational& c,
                               MonomialOrder order = MonomialOrder::degrevlex()) {
        Polynomial p(ring, std::move(order));
        if (c != 0) p.terms_.push_back({Exponent(ring->nvars(), 0), c});
        return p;
    }

    static Polynomial monomial(RingPtr ring, Exponent e, const Rational& c = 1,
                               MonomialOrder order = MonomialOrder::degrevlex()) {
        return Polynomial(std::move(ring), {Term{std::move(e), c}}, std::move(order));
    }

    static Polynomial variable(const RingPtr& ring, size_t j,
                               MonomialOrder order = MonomialOrder::degrevlex()) {
        if (j >= ring->nvars()) throw dimension_error("variable index out of range");
        Exponent e(ring->nvars(), 0);
        e[j] = 1;
        return monomial(ring, std::move(e), 1, std::move(order));
    }

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }

    const Term& leading_term() const {
        if (terms_.empty()) throw undefined_input_error("leading term of the zero polynomial");
        return terms_.front();
    }
    const Exponent& leading_exponent() const { return leading_term().exp; }
    const Rational& leading_coeff() const { return leading_term().coeff; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && is_zero_exponent(terms_[0].exp));
    }
    bool is_unit_constant() const { return terms_.size() == 1 && is_zero_exponent(terms_[0].exp); }

    long long degree() const {  // max total degree; -1 for 0
        long long d = -1;
        for (const auto& t : terms_) d = std::max(d, total_degree(t.exp));
        return d;
    }

    Polynomial sorted_under(const MonomialOrder& order) const {
        Polynomial p(ring_, order);
        p.terms_ = terms_;
        std::sort(p.terms_.begin(), p.terms_.end(),
                  [&](const Term& a, const Term& b) { return order.compare(a.exp, b.exp) > 0; });
        return p;
    }

    Polynomial operator-() const {
        Polynomial p(ring_, order_);
        p.terms_ = terms_;
        for (auto& t : p.terms_) t.coeff = -t.coeff;
        return p;
    }

    Polynomial operator+(const Polynomial& o) const { return combined(o, 1); }
    Polynomial operator-(const Polynomial& o) const { return combined(o, -1); }

    Polynomial operator*(const Rational& c) const {
        Polynomial p(ring_, order_);
        if (c == 0) return p;
        p.terms_ = terms_;
        for (auto& t : p.terms_) t.coeff *= c;
        return p;
    }

    // Multiplication by the monomial c * x^e; preserves term ordering.
    Polynomial times_monomial(const Exponent& e, const Rational& c) const {
        Polynomial p(ring_, order_);
        if (c == 0) return p;
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({exp_add(t.exp, e), t.coeff * c});
        return p;
    }

    Polynomial operator*(const Polynomial& o) const {
        check_same_ring(ring_, o.ring_);
        auto cmp = [this](const Exponent& a, const Exponent& b) { return order_.compare(a, b) > 0; };
        std::map<Exponent, Rational, decltype(cmp)> acc(cmp);
        for (const auto& s : terms_)
            for (const auto& t : o.terms_) {
                Exponent e = exp_add(s.exp, t.exp);
                auto [it, fresh] = acc.try_emplace(std::move(e), 0);
                it->second += s.coeff * t.coeff;
            }
        Polynomial p(ring_, order_);
        p.terms_.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (c != 0) p.terms_.push_back({e, c});
        return p;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return *this * (Rational(1) / leading_coeff());
    }

    // Order-insensitive.
    bool operator==(const Polynomial& o) const {
        if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty() && (!ring_ == !o.ring_);
        if (*ring_ != *o.ring_) return false;
        if (terms_.size() != o.terms_.size()) return false;
        auto key = [](const Polynomial& p) {
            std::vector<std::pair<Exponent, Rational>> v;
            v.reserve(p.terms_.size());
            for (const auto& t : p.terms_) v.emplace_back(t.exp, t.coeff);
            std::sort(v.begin(), v.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            return v;
        };
        return key(*this) == key(o);
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

  private:
    Polynomial combined(const Polynomial& o, int sign) const {
        check_same_ring(ring_, o.ring_);
        const Polynomial& rhs =
            same_order(order_, o.order_) ? o : o.sorted_under(order_);
        Polynomial p(ring_, order_);
        p.terms_.reserve(terms_.size() + rhs.terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() && j < rhs.terms_.size()) {
            int c = order_.compare(terms_[i].exp, rhs.terms_[j].exp);
            if (c > 0) {
                p.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                p.terms_.push_back({rhs.terms_[j].exp, sign * rhs.terms_[j].coeff});
                ++j;
            } else {
                Rational v = terms_[i].coeff + sign * rhs.terms_[j].coeff;
                if (v != 0) p.terms_.push_back({terms_[i].exp, std::move(v)});
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
        for (; j < rhs.terms_.size(); ++j)
            p.terms_.push_back({rhs.terms_[j].exp, sign * rhs.terms_[j].coeff});
        return p;
    }

    static bool same_order(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind == b.kind && a.weights == b.weights && a.tie == b.tie &&
               a.first_block == b.first_block;
    }

    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// Sum of the terms of maximal w-weight. w may be any rational vector; the
// polynomial must be nonzero.
inline Polynomial initial_form(const Polynomial& f, const std::vector<Rational>& w) {
    if (f.is_zero()) throw undefined_input_error("initial form of the zero polynomial");
    if (w.size() != f.ring()->nvars())
        throw dimension_error("weight vector length differs from ring variable count");
    Rational best;
    bool first = true;
    for (const auto& t : f.terms()) {
        Rational d = weighted_degree(t.exp, w);
        if (first || d > best) {
            best = std::move(d);
            first = false;
        }
    }
    std::vector<Term> keep;
    for (const auto& t : f.terms())
        if (weighted_degree(t.exp, w) == best) keep.push_back(t);
    return Polynomial(f.ring(), std::move(keep), f.order());
}

inline Rational weight_of(const Polynomial& f, const std::vector<Rational>& w) {
    if (f.is_zero()) throw undefined_input_error("weight of the zero polynomial");
    Rational best;
    bool first = true;
    for (const auto& t : f.terms()) {
        Rational d = weighted_degree(t.exp, w);
        if (first || d > best) {
            best = std::move(d);
            first = false;
        }
    }
    return best;
}

// Degree under the ring grading; nullopt when inhomogeneous. Zero maps to
// the zero degree vector.
inline std::optional<DegreeVector> multidegree(const Polynomial& f) {
    const PolyRing& R = *f.ring();
    DegreeVector deg(R.grading_rank(), 0);
    bool first = true;
    for (const auto& t : f.terms()) {
        DegreeVector d(R.grading_rank(), 0);
        for (size_t r = 0; r < R.grading_rank(); ++r)
            for (size_t j = 0; j < R.nvars(); ++j) d[r] += R.grading[r][j] * t.exp[j];
        if (first) {
            deg = std::move(d);
            first = false;
        } else if (d != deg) {
            return std::nullopt;
        }
    }
    return deg;
}

inline bool is_homogeneous(const Polynomial& f) { return multidegree(f).has_value(); }

}  // namespace gkzcm
