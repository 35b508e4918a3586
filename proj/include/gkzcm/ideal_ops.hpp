// Ideal-level operations built on Buchberger: initial ideals, elimination by
// a block order, saturation and colon by a single element (via the auxiliary
// variable trick), containment/equality, Krull dimension of the quotient via
// the initial monomial ideal, Hilbert series numerators, and the
// regular-sequence test.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gkzcm/groebner.hpp"

namespace gkzcm {

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    check_same_ring(a.ring, b.ring);
    std::vector<Polynomial> gens = a.gens;
    gens.insert(gens.end(), b.gens.begin(), b.gens.end());
    return Ideal(a.ring, std::move(gens));
}

// Maps an ideal into a ring containing the same variable names (matched by
// name, any positions). Grading of the target ring wins, and the image is
// re-sorted under the default order: variable-count-specific orders (weights,
// elimination blocks) do not transfer.
inline Polynomial map_to_ring(const Polynomial& f, const RingPtr& target) {
    const PolyRing& from = *f.ring();
    std::vector<int> where(from.nvars());
    for (size_t j = 0; j < from.nvars(); ++j) {
        where[j] = target->var_index(from.vars[j]);
        if (where[j] < 0)
            throw ring_mismatch_error("target ring lacks variable '" + from.vars[j] + "'");
    }
    std::vector<Term> terms;
    terms.reserve(f.num_terms());
    for (const auto& t : f.terms()) {
        Exponent e(target->nvars(), 0);
        for (size_t j = 0; j < from.nvars(); ++j) e[where[j]] = t.exp[j];
        terms.push_back({std::move(e), t.coeff});
    }
    return Polynomial(target, std::move(terms));
}

inline Ideal map_to_ring(const Ideal& I, const RingPtr& target) {
    std::vector<Polynomial> gens;
    gens.reserve(I.gens.size());
    for (const auto& g : I.gens) gens.push_back(map_to_ring(g, target));
    return Ideal(target, std::move(gens));
}

// in_w(I) = < in_w(g) : g in a w-refined Groebner basis >. Requires strictly
// positive weights so the refined order is a term order.
inline Ideal initial_ideal(const Ideal& I, const std::vector<Rational>& w) {
    if (w.size() != I.ring->nvars())
        throw dimension_error("weight vector length differs from ring variable count");
    for (const auto& wi : w)
        if (wi <= 0) throw unsupported_weight_error("initial ideal requires strictly positive weights");
    GroebnerBasis gb = buchberger(I, MonomialOrder::weighted(w));
    std::vector<Polynomial> gens;
    gens.reserve(gb.elements.size());
    for (const auto& g : gb.elements) gens.push_back(initial_form(g, w));
    return Ideal(I.ring, std::move(gens));
}

// I ∩ Q[vars not dropped], returned over the subring (grading columns of the
// dropped variables removed).
inline Ideal eliminate(const Ideal& I, const std::vector<char>& drop) {
    if (drop.size() != I.ring->nvars())
        throw dimension_error("drop mask length differs from ring variable count");
    GroebnerBasis gb = buchberger(I, MonomialOrder::elimination(drop));

    std::vector<std::string> keep_names;
    for (size_t j = 0; j < drop.size(); ++j)
        if (!drop[j]) keep_names.push_back(I.ring->vars[j]);
    std::vector<DegreeVector> grading;
    for (const auto& row : I.ring->grading) {
        DegreeVector r;
        for (size_t j = 0; j < drop.size(); ++j)
            if (!drop[j]) r.push_back(row[j]);
        grading.push_back(std::move(r));
    }
    RingPtr sub = ring_ptr(PolyRing::graded(std::move(keep_names), std::move(grading)));

    std::vector<Polynomial> gens;
    for (const auto& g : gb.elements) {
        bool free = true;
        for (const auto& t : g.terms())
            for (size_t j = 0; j < drop.size() && free; ++j)
                if (drop[j] && t.exp[j] != 0) free = false;
        if (!free) continue;
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            Exponent e;
            e.reserve(sub->nvars());
            for (size_t j = 0; j < drop.size(); ++j)
                if (!drop[j]) e.push_back(t.exp[j]);
            terms.push_back({std::move(e), t.coeff});
        }
        gens.emplace_back(sub, std::move(terms));
    }
    return Ideal(sub, std::move(gens));
}

namespace detail {

inline std::string fresh_var_name(const PolyRing& R) {
    std::string base = "t";
    if (R.var_index(base) < 0) return base;
    for (int k = 0;; ++k) {
        std::string name = base + "_" + std::to_string(k);
        if (R.var_index(name) < 0) return name;
    }
}

// Ring with one auxiliary variable appended (zero grading column).
inline RingPtr extended_ring(const RingPtr& R, const std::string& aux) {
    std::vector<std::string> names = R->vars;
    names.push_back(aux);
    std::vector<DegreeVector> grading = R->grading;
    for (auto& row : grading) row.push_back(0);
    return ring_ptr(PolyRing::graded(std::move(names), std::move(grading)));
}

// Restricts polynomials over ext (original ring + trailing aux vars already
// eliminated) back to the original ring.
inline Ideal pull_back(const Ideal& I, const RingPtr& original) {
    if (I.ring->vars != original->vars)
        throw internal_error("pull_back: variable mismatch after elimination");
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens) gens.push_back(map_to_ring(g, original));
    return Ideal(original, std::move(gens));
}

}  // namespace detail

// (I : f^inf) via I + <1 - t f> and elimination of t.
inline Ideal saturate(const Ideal& I, const Polynomial& f) {
    check_same_ring(I.ring, f.ring());
    if (f.is_zero()) throw undefined_input_error("saturation by the zero polynomial");
    std::string aux = detail::fresh_var_name(*I.ring);
    RingPtr ext = detail::extended_ring(I.ring, aux);
    size_t t = ext->nvars() - 1;

    std::vector<Polynomial> gens;
    for (const auto& g : I.gens) gens.push_back(map_to_ring(g, ext));
    Polynomial one = Polynomial::constant(ext, 1);
    gens.push_back(one - Polynomial::variable(ext, t) * map_to_ring(f, ext));

    std::vector<char> drop(ext->nvars(), 0);
    drop[t] = 1;
    return detail::pull_back(eliminate(Ideal(ext, std::move(gens)), drop), I.ring);
}

// Exact division p / f; throws internal_error if f does not divide p.
inline Polynomial exact_divide(const Polynomial& p, const Polynomial& f) {
    check_same_ring(p.ring(), f.ring());
    if (f.is_zero()) throw undefined_input_error("division by the zero polynomial");
    std::vector<Polynomial> q;
    Polynomial rem = normal_form(p, {f}, MonomialOrder::degrevlex(), &q);
    if (!rem.is_zero()) throw internal_error("exact_divide: divisor does not divide");
    return q[0];
}

// (I : f) = (I ∩ <f>) / f.
inline Ideal ideal_quotient(const Ideal& I, const Polynomial& f) {
    check_same_ring(I.ring, f.ring());
    if (f.is_zero()) throw undefined_input_error("ideal quotient by the zero polynomial");
    std::string aux = detail::fresh_var_name(*I.ring);
    RingPtr ext = detail::extended_ring(I.ring, aux);
    size_t ti = ext->nvars() - 1;
    Polynomial t = Polynomial::variable(ext, ti);
    Polynomial one = Polynomial::constant(ext, 1);

    std::vector<Polynomial> gens;  // t·I + (1-t)·<f>
    for (const auto& g : I.gens) gens.push_back(t * map_to_ring(g, ext));
    gens.push_back((one - t) * map_to_ring(f, ext));
    std::vector<char> drop(ext->nvars(), 0);
    drop[ti] = 1;
    Ideal meet = detail::pull_back(eliminate(Ideal(ext, std::move(gens)), drop), I.ring);

    std::vector<Polynomial> quots;
    for (const auto& g : meet.gens) quots.push_back(exact_divide(g, f));
    return Ideal(I.ring, std::move(quots));
}

inline bool ideal_contains(const Ideal& big, const Ideal& small) {
    check_same_ring(big.ring, small.ring);
    GroebnerBasis gb = buchberger(big);
    for (const auto& g : small.gens)
        if (!normal_form(g, gb).is_zero()) return false;
    return true;
}

inline bool ideal_contains(const GroebnerBasis& big, const Ideal& small) {
    check_same_ring(big.ring, small.ring);
    for (const auto& g : small.gens)
        if (!normal_form(g, big).is_zero()) return false;
    return true;
}

// Reduced Groebner bases are unique per (ideal, order): compare them.
inline bool ideal_equal(const Ideal& a, const Ideal& b) {
    check_same_ring(a.ring, b.ring);
    GroebnerBasis ga = buchberger(a), gb = buchberger(b);
    return ga.elements == gb.elements;
}

inline bool is_unit_ideal(const Ideal& I) { return buchberger(I).is_unit(); }

namespace detail {

// Minimal generators of the monomial ideal of leading terms.
inline std::vector<Exponent> minimal_lead_monomials(const GroebnerBasis& gb) {
    std::vector<Exponent> lead;
    for (const auto& g : gb.elements) lead.push_back(g.leading_exponent());
    std::vector<Exponent> minimal;
    for (size_t i = 0; i < lead.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < lead.size() && !redundant; ++j)
            if (j != i && exp_divides(lead[j], lead[i]) && lead[j] != lead[i]) redundant = true;
        if (!redundant && std::find(minimal.begin(), minimal.end(), lead[i]) == minimal.end())
            minimal.push_back(lead[i]);
    }
    return minimal;
}

// Max cardinality of a variable set V such that no generator's support is
// contained in V; exhaustive over subsets (documented O(2^n * gens) bound).
inline int monomial_quotient_dimension(const std::vector<Exponent>& gens, size_t nvars) {
    if (nvars > static_cast<size_t>(config::max_dimension_vars.load()))
        throw validation_error("monomial dimension search limited to " +
                               std::to_string(config::max_dimension_vars.load()) +
                               " variables (raise with --max-vars)");
    std::vector<uint64_t> supports;
    for (const auto& e : gens) {
        uint64_t m = support_mask(e);
        if (m == 0) throw empty_variety_error("unit ideal has an empty variety");
        supports.push_back(m);
    }
    int best = 0;
    for (uint64_t v = 0; v < (uint64_t{1} << nvars); ++v) {
        bool ok = true;
        for (uint64_t s : supports)
            if ((s & ~v) == 0) {  // support inside V
                ok = false;
                break;
            }
        if (!ok) continue;
        best = std::max(best, static_cast<int>(__builtin_popcountll(v)));
    }
    return best;
}

}  // namespace detail

// Krull dimension of ring/I, via dim ring/I = dim ring/LT(I).
inline int krull_dimension(const Ideal& I) {
    GroebnerBasis gb = buchberger(I);
    if (gb.is_unit()) throw empty_variety_error("unit ideal has an empty variety");
    if (gb.is_zero()) return static_cast<int>(I.ring->nvars());
    return detail::monomial_quotient_dimension(detail::minimal_lead_monomials(gb),
                                               I.ring->nvars());
}

namespace detail {

// Numerator K(z) of the Hilbert series K(z)/(1-z)^nvars of T/<gens> under
// the standard grading, for a minimal monomial generating set. Splits on a
// most-shared variable x: K(I) = K(I + <x>) + z K(I : x), the series of the
// exact sequence 0 -> (T/(I:x))(-1) -> T/I -> T/(I+<x>) -> 0. Base cases:
// no generators, the unit ideal, and pure powers of distinct variables.
inline std::vector<Integer> hilbert_numerator_monomial(std::vector<Exponent> gens,
                                                       size_t nvars) {
    for (const auto& g : gens)
        if (is_zero_exponent(g)) return {Integer(0)};
    bool pure = true;
    for (const auto& g : gens) {
        size_t nz = 0;
        for (int e : g)
            if (e > 0) ++nz;
        if (nz > 1) {
            pure = false;
            break;
        }
    }
    if (pure) {  // minimality makes the variables distinct
        std::vector<Integer> k{Integer(1)};
        for (const auto& g : gens) {
            size_t d = static_cast<size_t>(total_degree(g));
            std::vector<Integer> next(k.size() + d, Integer(0));
            for (size_t i = 0; i < k.size(); ++i) {
                next[i] += k[i];
                next[i + d] -= k[i];
            }
            k = std::move(next);
        }
        return k;
    }

    std::vector<size_t> uses(nvars, 0);
    for (const auto& g : gens)
        for (size_t i = 0; i < nvars; ++i)
            if (g[i] > 0) ++uses[i];
    size_t piv = static_cast<size_t>(
        std::max_element(uses.begin(), uses.end()) - uses.begin());

    std::vector<Exponent> plus, colon;
    for (const auto& g : gens) {
        if (g[piv] == 0) plus.push_back(g);
        Exponent h = g;
        if (h[piv] > 0) --h[piv];
        colon.push_back(std::move(h));
    }
    {
        Exponent x(nvars, 0);
        x[piv] = 1;
        plus.push_back(std::move(x));
    }
    std::vector<Exponent> cmin;
    for (size_t i = 0; i < colon.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < colon.size() && !redundant; ++j)
            if (j != i && exp_divides(colon[j], colon[i]) &&
                (colon[j] != colon[i] || j < i))
                redundant = true;
        if (!redundant) cmin.push_back(colon[i]);
    }

    std::vector<Integer> a = hilbert_numerator_monomial(std::move(plus), nvars);
    std::vector<Integer> b = hilbert_numerator_monomial(std::move(cmin), nvars);
    std::vector<Integer> k(std::max(a.size(), b.size() + 1), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) k[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) k[i + 1] += b[i];
    while (!k.empty() && k.back() == 0) k.pop_back();
    return k;
}

}  // namespace detail

// Numerator of the Hilbert series of ring/I over (1-z)^nvars, standard
// grading; by Macaulay's theorem the leading-term ideal has the same series.
inline std::vector<Integer> hilbert_numerator(const GroebnerBasis& gb) {
    if (gb.is_zero()) return {Integer(1)};
    return detail::hilbert_numerator_monomial(detail::minimal_lead_monomials(gb),
                                              gb.ring->nvars());
}

struct RegularSequenceResult {
    bool regular = true;
    size_t failing_index = 0;  // 1-based; 0 when regular
};

namespace detail {

// Total degree shared by all terms; nullopt for zero or inhomogeneous input.
inline std::optional<long long> homogeneous_degree(const Polynomial& f) {
    if (f.is_zero()) return std::nullopt;
    long long d = total_degree(f.terms().front().exp);
    for (const auto& t : f.terms())
        if (total_degree(t.exp) != d) return std::nullopt;
    return d;
}

}  // namespace detail

// f_1..f_r regular on ring/I: each step requires (J : f_k) = J with J the
// ideal so far, and J proper before testing the next element.
//
// Homogeneous case (standard grading): multiplication by f of degree e on
// T/J gives 0 -> (T/(J:f))(-e) -> T/J -> T/(J+<f>) -> 0, and J is contained
// in J:f, so f is a nonzerodivisor exactly when the Hilbert numerator of
// T/(J+<f>) equals (1-z^e) times that of T/J. One basis per step, carried
// into the next. Inhomogeneous inputs fall back to the colon computation:
// equality there reduces to one containment since J is contained in (J:f).
inline RegularSequenceResult is_regular_sequence(const std::vector<Polynomial>& seq,
                                                 const Ideal& I) {
    bool graded = true;
    for (const auto& g : I.gens)
        if (!g.is_zero() && !detail::homogeneous_degree(g)) graded = false;
    for (const auto& f : seq)
        if (!f.is_zero() && !detail::homogeneous_degree(f)) graded = false;

    Ideal J = I;
    GroebnerBasis gbJ = buchberger(J);
    for (size_t k = 0; k < seq.size(); ++k) {
        if (gbJ.is_unit()) return {false, k + 1};
        if (seq[k].is_zero()) return {false, k + 1};
        J = Ideal(J.ring, gbJ.elements);
        if (graded) {
            long long e = *detail::homogeneous_degree(seq[k]);
            GroebnerBasis gbJf = buchberger(ideal_sum(J, Ideal(J.ring, {seq[k]})));
            std::vector<Integer> hj = hilbert_numerator(gbJ);
            std::vector<Integer> want(hj.size() + static_cast<size_t>(e), Integer(0));
            for (size_t i = 0; i < hj.size(); ++i) {
                want[i] += hj[i];
                want[i + static_cast<size_t>(e)] -= hj[i];
            }
            while (!want.empty() && want.back() == 0) want.pop_back();
            if (hilbert_numerator(gbJf) != want) return {false, k + 1};
            gbJ = std::move(gbJf);
        } else {
            Ideal Q = ideal_quotient(J, seq[k]);
            if (!ideal_contains(gbJ, Q)) return {false, k + 1};
            gbJ = buchberger(ideal_sum(J, Ideal(J.ring, {seq[k]})));
        }
    }
    return {true, 0};
}

}  // namespace gkzcm
