// Monomial orders on exponent vectors.
//
// Kinds: degrevlex (default tie-breaker everywhere), lex, weighted (rational
// weight vector refined by a tie-break kind), and a two-block elimination
// order (first block compared by degrevlex, then the rest by degrevlex).
// A weighted order is a genuine term order when all weights are nonnegative;
// callers that rely on termination (Buchberger, division) enforce that.
#pragma once

#include <vector>

#include "gkzcm/exponent.hpp"
#include "gkzcm/numeric.hpp"

namespace gkzcm {

struct MonomialOrder {
    enum class Kind { degrevlex, lex, weighted, block };

    Kind kind = Kind::degrevlex;
    std::vector<Rational> weights;     // weighted only
    std::vector<long long> iweights;   // weighted only: set when all weights are machine ints
    Kind tie = Kind::degrevlex;        // weighted only: degrevlex or lex
    std::vector<char> first_block;     // block only: 1 = variable in eliminated block

    static MonomialOrder degrevlex() { return MonomialOrder{}; }

    static MonomialOrder lex() {
        MonomialOrder o;
        o.kind = Kind::lex;
        return o;
    }

    static MonomialOrder weighted(std::vector<Rational> w, Kind tie = Kind::degrevlex) {
        if (tie != Kind::degrevlex && tie != Kind::lex)
            throw validation_error("weighted order tie-break must be degrevlex or lex");
        MonomialOrder o;
        o.kind = Kind::weighted;
        o.weights = std::move(w);
        o.tie = tie;
        bool integral = true;
        for (const auto& wi : o.weights)
            if (wi.get_den() != 1 || !wi.get_num().fits_slong_p()) {
                integral = false;
                break;
            }
        if (integral && !o.weights.empty()) {
            o.iweights.reserve(o.weights.size());
            for (const auto& wi : o.weights) o.iweights.push_back(wi.get_num().get_si());
        }
        return o;
    }

    // Eliminates the variables flagged in `block`.
    static MonomialOrder elimination(std::vector<char> block) {
        MonomialOrder o;
        o.kind = Kind::block;
        o.first_block = std::move(block);
        return o;
    }

    // -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Exponent& a, const Exponent& b) const {
        check_same_length(a, b);
        switch (kind) {
            case Kind::degrevlex:
                return cmp_degrevlex_full(a, b);
            case Kind::lex:
                return cmp_lex_full(a, b);
            case Kind::weighted: {
                if (weights.size() != a.size())
                    throw dimension_error("order weight length differs from exponent length");
                if (!iweights.empty()) {
                    long long wa = 0, wb = 0;
                    for (size_t i = 0; i < a.size(); ++i) {
                        wa += iweights[i] * a[i];
                        wb += iweights[i] * b[i];
                    }
                    if (wa != wb) return wa > wb ? 1 : -1;
                } else {
                    Rational wa = weighted_degree(a, weights);
                    Rational wb = weighted_degree(b, weights);
                    int c = cmp(wa, wb);
                    if (c != 0) return c;
                }
                return tie == Kind::lex ? cmp_lex_full(a, b) : cmp_degrevlex_full(a, b);
            }
            case Kind::block: {
                if (first_block.size() != a.size())
                    throw dimension_error("block mask length differs from exponent length");
                int c = cmp_degrevlex_masked(a, b, true);
                if (c != 0) return c;
                return cmp_degrevlex_masked(a, b, false);
            }
        }
        throw internal_error("unreachable order kind");
    }

    bool greater(const Exponent& a, const Exponent& b) const { return compare(a, b) > 0; }

  private:
    static int cmp(const Rational& a, const Rational& b) {
        int s = ::cmp(a, b);
        return s > 0 ? 1 : (s < 0 ? -1 : 0);
    }

    static int cmp_degrevlex_full(const Exponent& a, const Exponent& b) {
        long long da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db ? 1 : -1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
    }

    static int cmp_lex_full(const Exponent& a, const Exponent& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    }

    int cmp_degrevlex_masked(const Exponent& a, const Exponent& b, bool in_block) const {
        long long da = 0, db = 0;
        for (size_t i = 0; i < a.size(); ++i)
            if (static_cast<bool>(first_block[i]) == in_block) {
                da += a[i];
                db += b[i];
            }
        if (da != db) return da > db ? 1 : -1;
        for (size_t i = a.size(); i-- > 0;)
            if (static_cast<bool>(first_block[i]) == in_block && a[i] != b[i])
                return a[i] < b[i] ? 1 : -1;
        return 0;
    }
};

}  // namespace gkzcm
