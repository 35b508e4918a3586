// The three Cohen-Macaulay verdicts for a matrix A and parameter beta:
//   (i)   the semigroup ring R/I_A (A-graded resolution),
//   (ii)  the Groebner deformation R/in_(1) I_A (standard grading),
//   (iii) the graded GKZ module S/in_(1,1) H_A(beta).
// Together with cross-checking diagnostics: the Euler operators as a
// (candidate) regular sequence on S/in I_A S, the comparison of in_(1,1)
// H_A(beta) with in I_A S + <E>, umbrella consistency, and the dimension-2
// semigroup criterion. CM(ii) implies CM(iii) and CM(i); a computed
// violation of either implication is reported as an internal error.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gkzcm/resolution.hpp"
#include "gkzcm/semigroup.hpp"
#include "gkzcm/toric.hpp"
#include "gkzcm/umbrella.hpp"

namespace gkzcm {

struct CMReport {
    IntegerMatrix matrix;
    std::vector<Rational> beta;

    bool cm_semigroup_ring = false;
    bool cm_groebner_deformation = false;
    bool cm_gkz = false;
    HomologicalSummary semigroup_ring, groebner_deformation, gkz;

    size_t umbrella_top_faces = 0;
    bool umbrella_ok = false;
    int dim_euler_shadow = 0;  // dim S/(in I_A S + <E>), expected n
    RegularSequenceResult euler_sequence;
    bool euler_matches_deformation = false;
    bool gr_contains_euler_shadow = false;
    bool gr_equals_euler_shadow = false;

    bool has_dim2_check = false;
    bool dim2_cm = false;
    bool dim2_matches = false;
    std::string dim2_note;
};

namespace detail {

// Commutative Euler forms sum_j a_ij x_j d_j in S (the (1,1)-initial forms
// of E_i - beta_i; the constant drops).
inline std::vector<Polynomial> euler_forms(const IntegerMatrix& A, const RingPtr& S) {
    std::vector<Polynomial> forms;
    for (size_t i = 0; i < A.d; ++i) {
        std::vector<Term> ts;
        for (size_t j = 0; j < A.n; ++j) {
            if (A.rows[i][j] == 0) continue;
            Exponent e(S->nvars(), 0);
            e[j] = 1;          // x_j
            e[A.n + j] = 1;    // d_j
            ts.push_back({std::move(e), rational_of(A.rows[i][j])});
        }
        forms.push_back(Polynomial(S, std::move(ts)));
    }
    return forms;
}

}  // namespace detail

// dim2_region > 0 overrides the verification region of the dimension-2
// semigroup criterion.
inline CMReport classify(const IntegerMatrix& A, std::vector<Rational> beta = {},
                         long long dim2_region = 0) {
    validate_matrix(A);
    if (beta.empty()) beta.assign(A.d, Rational(0));
    if (beta.size() != A.d) throw dimension_error("beta length differs from the row count of A");

    CMReport rep;
    rep.matrix = A;
    rep.beta = beta;

    Ideal ia = toric_ideal(A);
    rep.semigroup_ring = homological_summary(ia);
    rep.cm_semigroup_ring = rep.semigroup_ring.is_cm;

    Ideal in_ia = map_to_ring(initial_ideal(ia, std::vector<Rational>(A.n, Rational(1))),
                              with_standard_grading(ia.ring));
    rep.groebner_deformation = homological_summary(in_ia);
    rep.cm_groebner_deformation = rep.groebner_deformation.is_cm;

    Ideal gr = gr_gkz(A, beta);
    rep.gkz = homological_summary(gr);
    rep.cm_gkz = rep.gkz.is_cm;

    const RingPtr& S = gr.ring;
    Ideal in_ia_s = map_to_ring(in_ia, S);
    std::vector<Polynomial> eulers = detail::euler_forms(A, S);
    Ideal shadow = ideal_sum(in_ia_s, Ideal(S, eulers));
    rep.dim_euler_shadow = krull_dimension(shadow);
    rep.euler_sequence = is_regular_sequence(eulers, in_ia_s);
    rep.euler_matches_deformation = rep.euler_sequence.regular == rep.cm_groebner_deformation;
    rep.gr_contains_euler_shadow = ideal_contains(gr, shadow);
    rep.gr_equals_euler_shadow = rep.gr_contains_euler_shadow && ideal_contains(shadow, gr);

    UmbrellaCheck um = umbrella_consistency_check(A, std::vector<Rational>(A.n, Rational(1)));
    rep.umbrella_ok = um.ok;
    rep.umbrella_top_faces = um.top_face_count;

    if (A.d == 2) {
        try {
            Dim2CMResult d2 = semigroup_cm_dim2(A, dim2_region);
            rep.has_dim2_check = true;
            rep.dim2_cm = d2.is_cm;
            rep.dim2_matches = d2.is_cm == rep.cm_semigroup_ring;
            if (!d2.is_cm) {
                rep.dim2_note = "hole at (" + std::to_string(d2.hole[0]) + "," +
                                std::to_string(d2.hole[1]) + ")";
            }
        } catch (const inconclusive_error& e) {
            rep.dim2_note = std::string("inconclusive: ") + e.what();
        }
    }

    if (rep.cm_groebner_deformation && !(rep.cm_gkz && rep.cm_semigroup_ring))
        throw internal_error("CM of the deformation must imply CM of the GKZ module and of the semigroup ring");
    return rep;
}

}  // namespace gkzcm
