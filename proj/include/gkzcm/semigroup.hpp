// Exact membership in the affine semigroup NA and the dimension-2
// Cohen-Macaulay criterion (NA - N r1) ∩ (NA - N r2) = NA for the extreme
// ray generators r1, r2.
//
// Membership is a forward closure from 0 by column additions, bounded by
// the pointedness functional eta: a point of NA at eta-level <= cap is a sum
// of columns whose partial sums all sit at level <= cap, so the closure is
// exact. A query at level L needs cap >= L; a caller-supplied smaller cap is
// refused with inconclusive_error rather than answered unsoundly.
#pragma once

#include <unordered_set>
#include <utility>
#include <vector>

#include "gkzcm/errors.hpp"
#include "gkzcm/intmatrix.hpp"

namespace gkzcm {

class SemigroupOracle {
public:
    explicit SemigroupOracle(const IntegerMatrix& A)
        : A_(A), eta_(positive_functional(A)) {
        for (const auto& row : A_.rows)
            for (long long v : row) maxabs_ = std::max(maxabs_, v < 0 ? -v : v);
    }

    // Decides b in NA. level_cap > 0 restricts the search to eta-levels
    // <= level_cap and refuses deeper queries with inconclusive_error.
    bool contains(const std::vector<long long>& b, const Rational& level_cap = 0) {
        if (b.size() != A_.d) throw dimension_error("point length differs from the row count");
        Rational lb = level(b);
        if (lb < 0) return false;
        if (level_cap > 0 && lb > level_cap)
            throw inconclusive_error("the search box is too small to decide membership");
        if (lb > built_cap_) {
            Rational doubled = built_cap_ * 2;
            grow(lb > doubled ? lb : doubled);
        }
        return lookup(b);
    }

    const std::vector<Rational>& eta() const { return eta_; }

private:
    Rational level(const std::vector<long long>& q) const {
        Rational s = 0;
        for (size_t i = 0; i < A_.d; ++i) s += eta_[i] * rational_of(q[i]);
        return s;
    }

    static unsigned long long pack(const std::vector<long long>& q) {
        unsigned long long key = 0;
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] < -32767 || q[i] > 32767)
                throw inconclusive_error("semigroup search exceeds the supported range");
            key |= static_cast<unsigned long long>(q[i] + 32768) << (16 * i);
        }
        return key;
    }

    bool in_box(const std::vector<long long>& q) const {
        for (long long v : q)
            if (v < -box_ || v > box_) return false;
        return true;
    }

    size_t index(const std::vector<long long>& q) const {
        size_t idx = 0;
        for (size_t i = 0; i < q.size(); ++i)
            idx = idx * static_cast<size_t>(2 * box_ + 1) + static_cast<size_t>(q[i] + box_);
        return idx;
    }

    bool lookup(const std::vector<long long>& q) const {
        if (!in_box(q)) return false;
        if (use_bitmap_) return bitmap_[index(q)];
        return points_.count(pack(q)) != 0;
    }

    void mark(const std::vector<long long>& q) {
        if (use_bitmap_)
            bitmap_[index(q)] = true;
        else
            points_.insert(pack(q));
    }

    void grow(Rational cap) {
        // every NA point at level <= cap is a nonnegative column combination
        // with coefficient sum <= cap, hence has |q|_inf <= cap * maxabs
        Integer m;
        mpz_cdiv_q(m.get_mpz_t(), cap.get_num().get_mpz_t(), cap.get_den().get_mpz_t());
        if (!m.fits_slong_p())
            throw inconclusive_error("semigroup search exceeds the supported range");
        box_ = std::max<long long>(m.get_si(), 0) * maxabs_ + 1;
        if (box_ > 32766) throw inconclusive_error("semigroup search exceeds the supported range");

        double cells = 1;
        for (size_t i = 0; i < A_.d; ++i) cells *= static_cast<double>(2 * box_ + 1);
        use_bitmap_ = cells <= 2e9;
        bitmap_.clear();
        points_.clear();
        if (use_bitmap_) bitmap_.assign(static_cast<size_t>(cells), false);

        std::vector<unsigned long long> work;
        std::vector<long long> zero(A_.d, 0), q(A_.d), t(A_.d);
        mark(zero);
        work.push_back(pack(zero));
        for (size_t head = 0; head < work.size(); ++head) {
            unsigned long long key = work[head];
            for (size_t i = 0; i < A_.d; ++i)
                q[i] = static_cast<long long>((key >> (16 * i)) & 0xFFFFu) - 32768;
            for (size_t j = 0; j < A_.n; ++j) {
                for (size_t i = 0; i < A_.d; ++i) t[i] = q[i] + A_.rows[i][j];
                if (level(t) > cap || lookup(t)) continue;
                mark(t);
                work.push_back(pack(t));
            }
        }
        built_cap_ = cap;
    }

    IntegerMatrix A_;
    std::vector<Rational> eta_;
    long long maxabs_ = 0;
    Rational built_cap_ = -1;
    long long box_ = 0;
    bool use_bitmap_ = false;
    std::vector<bool> bitmap_;
    std::unordered_set<unsigned long long> points_;
};

// One-shot membership. box > 0 caps the eta-level of the search; a query
// deeper than the cap throws inconclusive_error.
inline bool semigroup_membership(const IntegerMatrix& A, const std::vector<long long>& b,
                                 long long box = 0) {
    validate_matrix(A);
    SemigroupOracle oracle(A);
    return oracle.contains(b, rational_of(box));
}

struct Dim2CMResult {
    bool is_cm = false;
    std::vector<long long> hole;  // witness point when !is_cm
};

// Checks, for every lattice point p of the cone inside the verification
// region [0, R]^2 (extended to [-R, R]^2 when A has negative entries), that
// p in (NA - N r1) ∩ (NA - N r2) implies p in NA. Membership in NA - N r is
// upward closed in the multiplier (r lies in NA), so testing the single
// multiplier R per ray is equivalent to testing every multiplier <= R.
inline Dim2CMResult semigroup_cm_dim2(const IntegerMatrix& A, long long region = 0) {
    validate_matrix(A);
    if (A.d != 2)
        throw unsupported_dimension_error("the semigroup criterion is implemented for d = 2");

    long long maxabs = 0;
    bool negatives = false;
    for (const auto& row : A.rows)
        for (long long v : row) {
            maxabs = std::max(maxabs, v < 0 ? -v : v);
            negatives = negatives || v < 0;
        }
    const long long R = region > 0 ? region : 10 * maxabs * static_cast<long long>(A.n);
    if (R < maxabs)
        throw inconclusive_error("the verification region is smaller than the generators");

    auto cross = [](const std::vector<long long>& a, const std::vector<long long>& b) {
        return a[0] * b[1] - a[1] * b[0];
    };
    // Extreme rays: a column with every other column on one side of it.
    std::vector<long long> r1, r2;
    for (size_t j = 0; j < A.n; ++j) {
        std::vector<long long> c = A.column(j);
        bool allpos = true, allneg = true;
        for (size_t k = 0; k < A.n; ++k) {
            long long s = cross(c, A.column(k));
            allpos = allpos && s >= 0;
            allneg = allneg && s <= 0;
        }
        if (allpos && r1.empty()) r1 = c;
        if (allneg && r2.empty()) r2 = c;
    }
    if (r1.empty() || r2.empty() || cross(r1, r2) == 0)
        throw internal_error("extreme ray search failed on a full-rank pointed matrix");

    SemigroupOracle oracle(A);
    const long long lo = negatives ? -R : 0;
    for (long long x = lo; x <= R; ++x)
        for (long long y = lo; y <= R; ++y) {
            std::vector<long long> p{x, y};
            if (cross(r1, p) < 0 || cross(r2, p) > 0) continue;  // outside the cone
            if (oracle.contains(p)) continue;
            std::vector<long long> t1{x + R * r1[0], y + R * r1[1]};
            std::vector<long long> t2{x + R * r2[0], y + R * r2[1]};
            if (oracle.contains(t1) && oracle.contains(t2)) return {false, p};
        }
    return {true, {}};
}

}  // namespace gkzcm
