// The toric ideal I_A, Euler operators, the GKZ left ideal H_A(beta) in the
// Weyl algebra, and its associated graded ideal under the total-order
// filtration. I_A lives in Q[d1..dn] graded by deg d_j = a_j; the graded
// GKZ ideal lives in the commutative image S = Q[x1..xn, d1..dn].
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gkzcm/ideal_ops.hpp"
#include "gkzcm/intmatrix.hpp"
#include "gkzcm/weyl.hpp"

namespace gkzcm {

// Q[d1..dn] with the A-grading deg d_j = a_j (column j of A).
inline RingPtr toric_ring(const IntegerMatrix& A) {
    std::vector<std::string> names;
    for (size_t j = 1; j <= A.n; ++j) names.push_back("d" + std::to_string(j));
    std::vector<DegreeVector> grading(A.d, DegreeVector(A.n));
    for (size_t i = 0; i < A.d; ++i)
        for (size_t j = 0; j < A.n; ++j) grading[i][j] = A.rows[i][j];
    return ring_ptr(PolyRing::graded(std::move(names), std::move(grading)));
}

namespace detail {

// Lattice ideal of ker A: binomials d^{u+} - d^{u-} for a kernel basis,
// saturated once by d1...dn. No validity checks; umbrella consistency uses
// this on column submatrices that need not satisfy the full contract.
inline Ideal toric_ideal_unchecked(const IntegerMatrix& A, const RingPtr& R) {
    std::vector<Polynomial> gens;
    for (const auto& u : lattice_kernel(A)) {
        Exponent plus(A.n, 0), minus(A.n, 0);
        for (size_t j = 0; j < A.n; ++j) {
            if (u[j] > 0) plus[j] = static_cast<int>(u[j]);
            if (u[j] < 0) minus[j] = static_cast<int>(-u[j]);
        }
        gens.push_back(Polynomial::monomial(R, plus) - Polynomial::monomial(R, minus));
    }
    Ideal lattice(R, std::move(gens));
    Exponent all_ones(A.n, 1);
    return saturate(lattice, Polynomial::monomial(R, all_ones));
}

}  // namespace detail

inline Ideal toric_ideal(const IntegerMatrix& A) {
    validate_matrix(A);
    return detail::toric_ideal_unchecked(A, toric_ring(A));
}

// E_i - beta_i with E_i = sum_j a_ij x_j d_j, one operator per row of A.
inline std::vector<WeylElement> euler_operators(const IntegerMatrix& A,
                                                const std::vector<Rational>& beta) {
    if (beta.size() != A.d) throw dimension_error("beta length differs from the row count of A");
    WeylAlgebra alg = weyl_algebra(A.n);
    std::vector<WeylElement> ops;
    for (size_t i = 0; i < A.d; ++i) {
        WeylElement e = WeylElement::zero(alg);
        for (size_t j = 0; j < A.n; ++j) {
            if (A.rows[i][j] == 0) continue;
            Exponent m(alg.width(), 0);
            m[alg.x_pos(j)] = 1;
            m[alg.d_pos(j)] = 1;
            e = e + WeylElement::monomial(alg, std::move(m), rational_of(A.rows[i][j]));
        }
        ops.push_back(e - WeylElement::constant(alg, beta[i]));
    }
    return ops;
}

// H_A(beta): the left ideal generated by the toric generators (read in D,
// x-free) and the Euler operators E_i - beta_i.
inline WeylIdeal gkz_ideal(const IntegerMatrix& A, const std::vector<Rational>& beta) {
    Ideal ia = toric_ideal(A);
    WeylAlgebra alg = weyl_algebra(A.n);
    std::vector<WeylElement> gens;
    for (const auto& g : ia.gens) {
        WeylElement p = WeylElement::zero(alg);
        for (const auto& t : g.terms()) {
            Exponent m(alg.width(), 0);
            for (size_t j = 0; j < A.n; ++j) m[alg.d_pos(j)] = t.exp[j];
            p = p + WeylElement::monomial(alg, std::move(m), t.coeff);
        }
        gens.push_back(std::move(p));
    }
    for (auto& e : euler_operators(A, beta)) gens.push_back(std::move(e));
    return WeylIdeal(alg, std::move(gens));
}

// in_(1,1) H_A(beta) in S = Q[x, d]: the graded object of the GKZ system
// under the weight (u, v) = (1, 1).
inline Ideal gr_gkz(const IntegerMatrix& A, const std::vector<Rational>& beta) {
    return gr_initial_ideal(gkz_ideal(A, beta), bernstein_weight(A.n));
}

}  // namespace gkzcm
