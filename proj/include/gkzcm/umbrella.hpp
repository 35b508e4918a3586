// The L-umbrella of A: faces of conv({0} ∪ {a_j / L_j}) that do not contain
// the origin, each recorded as its column set together with a witnessing
// covector c (c . a_j/L_j = 1 on the face, < 1 off it). Facets are found by
// exact hyperplane enumeration over column subsets; lower faces are
// intersections of facets, and their witnesses are built by averaging the
// level-1 facet covectors and adding the supporting covectors through 0.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gkzcm/errors.hpp"
#include "gkzcm/ideal_ops.hpp"
#include "gkzcm/intmatrix.hpp"
#include "gkzcm/linalg.hpp"
#include "gkzcm/toric.hpp"

namespace gkzcm {

struct UmbrellaFace {
    std::vector<int> columns;       // 0-based column indices, sorted
    int dim = 0;                    // affine dimension of the face
    std::vector<Rational> covector; // c with c . a_j/L_j = 1 on, < 1 off
};

struct Umbrella {
    std::vector<UmbrellaFace> faces;      // all faces avoiding the origin
    std::vector<UmbrellaFace> top_faces;  // faces of dimension d - 1
};

namespace detail {

inline std::vector<QRow> scaled_points(const IntegerMatrix& A, const std::vector<Rational>& L) {
    if (L.size() != A.n) throw dimension_error("weight length differs from the column count");
    for (const auto& w : L)
        if (w <= 0) throw validation_error("umbrella weights must be strictly positive");
    std::vector<QRow> pts(A.n, QRow(A.d));
    for (size_t j = 0; j < A.n; ++j)
        for (size_t i = 0; i < A.d; ++i) pts[j][i] = rational_of(A.rows[i][j]) / L[j];
    return pts;
}

inline Rational dot(const QRow& a, const QRow& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace detail

inline Umbrella umbrella(const IntegerMatrix& A, const std::vector<Rational>& L) {
    validate_matrix(A);
    std::vector<QRow> pts = detail::scaled_points(A, L);
    const size_t d = A.d, n = A.n;

    // Level-1 facets: hyperplanes c . x = 1 through d of the points with
    // every point on the <= 1 side. The origin sits strictly below.
    std::map<uint32_t, QRow> level1, zero;
    std::vector<size_t> idx(d);
    auto equality_mask = [&](const QRow& c, const Rational& value) {
        uint32_t mask = 0;
        for (size_t j = 0; j < n; ++j) {
            Rational s = detail::dot(c, pts[j]);
            if (s > value) return uint32_t(0);
            if (s == value) mask |= uint32_t(1) << j;
        }
        return mask;
    };
    auto subsets = [&](size_t k, auto&& visit) {
        std::vector<size_t> sub(k);
        auto rec = [&](auto&& self, size_t pos, size_t next) -> void {
            if (pos == k) {
                visit(sub);
                return;
            }
            for (size_t j = next; j + (k - pos) <= n; ++j) {
                sub[pos] = j;
                self(self, pos + 1, j + 1);
            }
        };
        rec(rec, 0, 0);
    };

    subsets(d, [&](const std::vector<size_t>& sub) {
        QMatrix m;
        for (size_t j : sub) m.push_back(pts[j]);
        auto c = solve_linear(std::move(m), QRow(d, Rational(1)));
        if (!c) return;
        uint32_t mask = equality_mask(*c, Rational(1));
        if (mask) level1.emplace(mask, *c);
    });

    // Facets through the origin: hyperplanes z . x = 0 spanned by d - 1 of
    // the points with every point on the <= 0 side.
    subsets(d - 1, [&](const std::vector<size_t>& sub) {
        QMatrix m;
        for (size_t j : sub) m.push_back(pts[j]);
        QMatrix basis = nullspace_basis(std::move(m), d);
        if (basis.size() != 1) return;  // facets through 0 span a (d-1)-space
        for (int sign : {1, -1}) {
            QRow z = basis[0];
            for (auto& v : z) v *= sign;
            uint32_t mask = equality_mask(z, Rational(0));
            bool supporting = true;
            for (size_t j = 0; j < n && supporting; ++j)
                supporting = detail::dot(z, pts[j]) <= 0;
            if (supporting) {
                zero.emplace(mask, z);
                break;
            }
        }
    });

    // Faces avoiding 0 are exactly the intersections of facet families that
    // include at least one level-1 facet; close under intersection.
    std::vector<uint32_t> work;
    std::map<uint32_t, char> seen;
    for (const auto& [mask, c] : level1)
        if (seen.emplace(mask, 1).second) work.push_back(mask);
    for (size_t head = 0; head < work.size(); ++head) {
        uint32_t f = work[head];
        auto meet = [&](uint32_t g) {
            uint32_t h = f & g;
            if (h && seen.emplace(h, 1).second) work.push_back(h);
        };
        for (const auto& [mask, c] : level1) meet(mask);
        for (const auto& [mask, z] : zero) meet(mask);
    }

    Umbrella out;
    for (const auto& [mask, flag] : seen) {
        UmbrellaFace face;
        for (size_t j = 0; j < n; ++j)
            if (mask & (uint32_t(1) << j)) face.columns.push_back(static_cast<int>(j));

        // Witness: average of the level-1 facet covectors through the face,
        // plus every supporting covector through 0 that contains it.
        QRow c(d, Rational(0));
        long count = 0;
        for (const auto& [m, cv] : level1)
            if ((m & mask) == mask) {
                for (size_t i = 0; i < d; ++i) c[i] += cv[i];
                ++count;
            }
        for (size_t i = 0; i < d; ++i) c[i] /= count;
        for (const auto& [m, zv] : zero)
            if ((m & mask) == mask)
                for (size_t i = 0; i < d; ++i) c[i] += zv[i];
        for (size_t j = 0; j < n; ++j) {
            Rational s = detail::dot(c, pts[j]);
            bool on = (mask >> j) & 1;
            if ((on && s != 1) || (!on && s >= 1))
                throw internal_error("umbrella witness covector failed verification");
        }
        face.covector = std::move(c);

        QMatrix diffs;
        for (size_t k = 1; k < face.columns.size(); ++k) {
            QRow r(d);
            for (size_t i = 0; i < d; ++i)
                r[i] = pts[face.columns[k]][i] - pts[face.columns[0]][i];
            diffs.push_back(std::move(r));
        }
        face.dim = diffs.empty() ? 0 : static_cast<int>(matrix_rank(std::move(diffs)));

        if (face.dim == static_cast<int>(d) - 1) out.top_faces.push_back(face);
        out.faces.push_back(std::move(face));
    }
    return out;
}

struct UmbrellaCheck {
    bool ok = true;
    std::vector<std::string> failures;
    size_t top_face_count = 0;
    int dim = 0;  // Krull dimension of R / in_L(I_A)
};

// Verifies that the L-initial ideal of I_A is compatible with the umbrella:
// in_L(I_A) ⊆ R I_tau + J_tau for every top face tau (J_tau generated by the
// variables off tau), and dim R / in_L(I_A) = d.
inline UmbrellaCheck umbrella_consistency_check(const IntegerMatrix& A,
                                                const std::vector<Rational>& L) {
    Umbrella um = umbrella(A, L);
    Ideal ia = toric_ideal(A);
    Ideal in_l = initial_ideal(ia, L);
    const RingPtr& R = in_l.ring;

    UmbrellaCheck out;
    out.top_face_count = um.top_faces.size();
    out.dim = krull_dimension(in_l);
    if (out.dim != static_cast<int>(A.d)) {
        out.ok = false;
        out.failures.push_back("dim R/in_L(I_A) is " + std::to_string(out.dim) + ", expected " +
                               std::to_string(A.d));
    }

    for (const auto& face : um.top_faces) {
        IntegerMatrix sub;
        sub.d = A.d;
        sub.n = face.columns.size();
        sub.rows.assign(A.d, std::vector<long long>(sub.n));
        std::vector<std::string> names;
        for (size_t k = 0; k < face.columns.size(); ++k) {
            for (size_t i = 0; i < A.d; ++i) sub.rows[i][k] = A.rows[i][face.columns[k]];
            names.push_back(R->vars[face.columns[k]]);
        }
        RingPtr subring = ring_ptr(PolyRing::standard(std::move(names)));
        Ideal face_ideal = map_to_ring(detail::toric_ideal_unchecked(sub, subring),
                                       with_standard_grading(R));

        std::vector<char> on(A.n, 0);
        for (int j : face.columns) on[j] = 1;
        std::vector<Polynomial> off_vars;
        for (size_t j = 0; j < A.n; ++j)
            if (!on[j]) off_vars.push_back(Polynomial::variable(face_ideal.ring, j));
        Ideal target = ideal_sum(face_ideal, Ideal(face_ideal.ring, std::move(off_vars)));

        if (!ideal_contains(target, map_to_ring(in_l, face_ideal.ring))) {
            out.ok = false;
            std::string cols;
            for (int j : face.columns) cols += (cols.empty() ? "" : ",") + std::to_string(j + 1);
            out.failures.push_back("in_L(I_A) is not contained in R I_tau + J_tau for tau = {" +
                                   cols + "}");
        }
    }
    return out;
}

}  // namespace gkzcm
