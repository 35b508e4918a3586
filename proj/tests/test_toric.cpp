#include <gtest/gtest.h>

#include <set>

#include "gkzcm/gkzcm.hpp"
#include "support/oracles.hpp"

using namespace gkzcm;

namespace {

IntegerMatrix twisted_cubic() { return make_matrix({{1, 1, 1, 1}, {0, 1, 2, 3}}); }

std::vector<std::string> strings_of(const std::vector<Polynomial>& v) {
    std::vector<std::string> out;
    for (const auto& g : v) out.push_back(to_string(g));
    return out;
}

std::set<std::vector<int>> column_sets(const std::vector<UmbrellaFace>& faces) {
    std::set<std::vector<int>> out;
    for (const auto& f : faces) out.insert(f.columns);
    return out;
}

// exact containment both ways: every enumerated binomial reduces to zero
// against GB(I), and every reduced-basis element of I appears verbatim (up
// to sign) among the enumerated binomials.
void expect_matches_enumeration(const IntegerMatrix& A, int bound) {
    Ideal ia = toric_ideal(A);
    GroebnerBasis gb = buchberger(ia);
    Ideal listed = oracles::toric_by_enumeration(A, ia.ring, bound);
    for (const auto& g : listed.gens)
        EXPECT_TRUE(normal_form(g, gb).is_zero()) << to_string(g);
    for (const auto& g : gb.elements) {
        ASSERT_LE(g.degree(), bound);
        bool found = false;
        for (const auto& h : listed.gens)
            if (h == g || h == -g) found = true;
        EXPECT_TRUE(found) << to_string(g);
    }
}

}  // namespace

TEST(IntMatrix, ParseAndPrintRoundTrip) {
    IntegerMatrix A = parse_matrix("0 1 2 2; 2 1 1 0");
    EXPECT_EQ(A.d, 2u);
    EXPECT_EQ(A.n, 4u);
    EXPECT_EQ(A.column(3), (std::vector<long long>{2, 0}));
    EXPECT_EQ(to_string(A), "0 1 2 2; 2 1 1 0");
    EXPECT_EQ(parse_matrix(to_string(A)), A);
}

TEST(IntMatrix, ParseRejectsMalformedText) {
    EXPECT_THROW(parse_matrix_shape("1 2; 3"), validation_error);
    EXPECT_THROW(parse_matrix_shape("1 a; 2 3"), validation_error);
    EXPECT_THROW(parse_matrix_shape(""), validation_error);
    EXPECT_THROW(parse_matrix_shape("1 2.5"), validation_error);
}

TEST(IntMatrix, NamedValidationViolations) {
    auto violations = [](std::vector<std::vector<long long>> rows) {
        return check_matrix(make_matrix(std::move(rows))).violations;
    };
    // not pointed: no functional is >= 1 on both 1 and -1
    auto v = violations({{1, -1}});
    ASSERT_FALSE(v.empty());
    EXPECT_NE(v[0].find("pointed"), std::string::npos);
    // proper sublattice
    v = violations({{2}});
    ASSERT_FALSE(v.empty());
    EXPECT_NE(v[0].find("lattice"), std::string::npos);
    // zero column
    v = violations({{0, 1}, {0, 1}});
    EXPECT_FALSE(v.empty());
    // rank deficient
    v = violations({{1, 1}, {1, 1}});
    EXPECT_FALSE(v.empty());
    // a valid matrix has none
    EXPECT_TRUE(check_matrix(twisted_cubic()).ok());
    EXPECT_THROW(validate_matrix(make_matrix({{1, -1}})), validation_error);
}

TEST(IntMatrix, SizeCaps) {
    std::vector<std::vector<long long>> wide(1, std::vector<long long>(13, 1));
    EXPECT_FALSE(check_matrix(make_matrix(wide)).ok());
    std::vector<std::vector<long long>> tall(5, std::vector<long long>(6, 1));
    tall[0] = {1, 0, 0, 0, 0, 1};
    EXPECT_FALSE(check_matrix(make_matrix(tall)).ok());
}

TEST(IntMatrix, PositiveFunctionalCertificate) {
    for (const char* txt : {"1 2", "0 1 2 2; 2 1 1 0", "1 1 1 1; 0 1 2 3",
                            "1 2 3 4 5; 3 1 3 2 0"}) {
        IntegerMatrix A = parse_matrix(txt);
        std::vector<Rational> eta = positive_functional(A);
        ASSERT_EQ(eta.size(), A.d);
        for (size_t j = 0; j < A.n; ++j) {
            Rational s = 0;
            for (size_t i = 0; i < A.d; ++i) s += eta[i] * rational_of(A.rows[i][j]);
            EXPECT_GE(s, 1) << txt << " column " << j;
        }
    }
}

TEST(IntMatrix, LatticeKernel) {
    auto k1 = lattice_kernel(make_matrix({{1, 2}}));
    ASSERT_EQ(k1.size(), 1u);
    EXPECT_EQ(1 * k1[0][0] + 2 * k1[0][1], 0);
    EXPECT_EQ(std::abs(k1[0][0]), 2);
    EXPECT_EQ(std::abs(k1[0][1]), 1);

    EXPECT_TRUE(lattice_kernel(make_matrix({{1, 0}, {0, 1}})).empty());

    IntegerMatrix A = twisted_cubic();
    auto k = lattice_kernel(A);
    ASSERT_EQ(k.size(), 2u);
    for (const auto& u : k)
        for (size_t i = 0; i < A.d; ++i) {
            long long s = 0;
            for (size_t j = 0; j < A.n; ++j) s += A.rows[i][j] * u[j];
            EXPECT_EQ(s, 0);
        }
}

TEST(Toric, RingCarriesTheAGrading) {
    IntegerMatrix A = twisted_cubic();
    RingPtr R = toric_ring(A);
    EXPECT_EQ(R->vars, (std::vector<std::string>{"d1", "d2", "d3", "d4"}));
    ASSERT_EQ(R->grading_rank(), 2u);
    EXPECT_EQ(R->grading[0], (DegreeVector{1, 1, 1, 1}));
    EXPECT_EQ(R->grading[1], (DegreeVector{0, 1, 2, 3}));
    for (const auto& g : toric_ideal(A).gens) EXPECT_TRUE(is_homogeneous(g));
}

TEST(Toric, FrozenBases) {
    Ideal line = toric_ideal(make_matrix({{1, 2}}));
    EXPECT_EQ(strings_of(buchberger(line).elements),
              (std::vector<std::string>{"d1^2-d2"}));

    Ideal cubic = toric_ideal(twisted_cubic());
    EXPECT_EQ(strings_of(buchberger(cubic).elements),
              (std::vector<std::string>{"d3^2-d2*d4", "d2*d3-d1*d4", "d2^2-d1*d3"}));
}

TEST(Toric, MatchesEnumerationOracle) {
    expect_matches_enumeration(make_matrix({{1, 2}}), 4);
    expect_matches_enumeration(twisted_cubic(), 6);
    expect_matches_enumeration(make_matrix({{0, 1, 2, 3}, {1, 2, 0, 0}}), 6);
}

TEST(Toric, EulerOperatorsFrozen) {
    IntegerMatrix A = parse_matrix("0 1 2 2; 2 1 1 0");
    auto ops = euler_operators(A, {Rational(0), Rational(0)});
    ASSERT_EQ(ops.size(), 2u);
    EXPECT_EQ(to_string(ops[0]), "x2*d2+2*x3*d3+2*x4*d4");
    EXPECT_EQ(to_string(ops[1]), "2*x1*d1+x2*d2+x3*d3");

    auto shifted = euler_operators(A, {Rational(1, 2), Rational(-3)});
    EXPECT_EQ(to_string(shifted[0]), "x2*d2+2*x3*d3+2*x4*d4-1/2");
    EXPECT_EQ(to_string(shifted[1]), "2*x1*d1+x2*d2+x3*d3+3");

    EXPECT_THROW(euler_operators(A, {Rational(0)}), dimension_error);
}

TEST(Toric, GkzIdealShape) {
    IntegerMatrix A = twisted_cubic();
    std::vector<Rational> beta{Rational(0), Rational(0)};
    WeylIdeal H = gkz_ideal(A, beta);
    size_t toric_count = toric_ideal(A).gens.size();
    ASSERT_EQ(H.gens.size(), toric_count + A.d);
    // toric generators are free of x; Euler operators are not
    WeylAlgebra alg = H.alg;
    for (size_t k = 0; k < toric_count; ++k)
        for (const auto& [e, c] : H.gens[k].terms())
            for (size_t i = 0; i < alg.n; ++i) EXPECT_EQ(e[alg.x_pos(i)], 0);
}

TEST(Toric, GrGkzHasDimensionN) {
    IntegerMatrix A = parse_matrix("1 2");
    Ideal gr = gr_gkz(A, {Rational(0)});
    EXPECT_EQ(gr.ring->nvars(), 4u);
    EXPECT_EQ(krull_dimension(gr), 2);
    // the d-only initial form of the toric part survives in gr
    EXPECT_TRUE(ideal_contains(gr, Ideal(gr.ring, {parse_polynomial(gr.ring, "d1^2")})));
}

TEST(Semigroup, MembershipSmall) {
    IntegerMatrix A = make_matrix({{2, 3}});
    SemigroupOracle oracle(A);
    EXPECT_TRUE(oracle.contains({0}));
    EXPECT_FALSE(oracle.contains({1}));
    EXPECT_TRUE(oracle.contains({2}));
    EXPECT_TRUE(oracle.contains({5}));
    EXPECT_TRUE(oracle.contains({97}));
    EXPECT_FALSE(oracle.contains({-2}));
    EXPECT_TRUE(semigroup_membership(A, {12}));
}

TEST(Semigroup, MembershipPlane) {
    IntegerMatrix A = parse_matrix("0 1 2 3; 1 1 0 0");
    EXPECT_TRUE(semigroup_membership(A, {0, 0}));
    EXPECT_TRUE(semigroup_membership(A, {2, 0}));
    EXPECT_TRUE(semigroup_membership(A, {1, 1}));
    EXPECT_FALSE(semigroup_membership(A, {1, 0}));  // the hole
    EXPECT_FALSE(semigroup_membership(A, {0, -1}));
    EXPECT_TRUE(semigroup_membership(A, {7, 2}));
}

TEST(Semigroup, SmallBoxIsInconclusiveNotWrong) {
    IntegerMatrix A = make_matrix({{1, 2}});
    EXPECT_THROW(semigroup_membership(A, {40}, 1), inconclusive_error);
    EXPECT_TRUE(semigroup_membership(A, {40}, 100));
    EXPECT_TRUE(semigroup_membership(A, {40}));  // default cap: always decided
}

TEST(Semigroup, Dim2CohenMacaulayCheck) {
    Dim2CMResult good = semigroup_cm_dim2(parse_matrix("0 1 2 2; 2 1 1 0"));
    EXPECT_TRUE(good.is_cm);

    IntegerMatrix A = parse_matrix("0 1 2 3; 1 1 0 0");
    Dim2CMResult bad = semigroup_cm_dim2(A);
    EXPECT_FALSE(bad.is_cm);
    ASSERT_EQ(bad.hole.size(), 2u);
    EXPECT_FALSE(semigroup_membership(A, bad.hole));

    EXPECT_THROW(semigroup_cm_dim2(make_matrix({{1, 2}})), unsupported_dimension_error);
    EXPECT_THROW(semigroup_cm_dim2(A, 1), inconclusive_error);
}

TEST(Umbrella, SegmentWithInteriorPoint) {
    Umbrella um = umbrella(make_matrix({{1, 2}}), {Rational(1), Rational(1)});
    ASSERT_EQ(um.faces.size(), 1u);
    EXPECT_EQ(um.faces[0].columns, (std::vector<int>{1}));
    EXPECT_EQ(um.faces[0].dim, 0);
    EXPECT_EQ(um.faces[0].covector, (QRow{Rational(1, 2)}));
    EXPECT_EQ(um.top_faces.size(), 1u);
}

TEST(Umbrella, TwistedCubicFaces) {
    Umbrella um = umbrella(twisted_cubic(), QRow(4, Rational(1)));
    std::set<std::vector<int>> expect{{0}, {3}, {0, 1, 2, 3}};
    EXPECT_EQ(column_sets(um.faces), expect);
    ASSERT_EQ(um.top_faces.size(), 1u);
    EXPECT_EQ(um.top_faces[0].columns, (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(um.top_faces[0].dim, 1);
    EXPECT_EQ(um.top_faces[0].covector, (QRow{Rational(1), Rational(0)}));
}

TEST(Umbrella, TableRowOneFaces) {
    Umbrella um = umbrella(parse_matrix("0 1 2 2; 2 1 1 0"), QRow(4, Rational(1)));
    std::set<std::vector<int>> expect{{0}, {2}, {3}, {0, 2}, {2, 3}};
    EXPECT_EQ(column_sets(um.faces), expect);
    EXPECT_EQ(column_sets(um.top_faces),
              (std::set<std::vector<int>>{{0, 2}, {2, 3}}));
    for (const auto& f : um.top_faces)
        if (f.columns == std::vector<int>{0, 2})
            EXPECT_EQ(f.covector, (QRow{Rational(1, 4), Rational(1, 2)}));
}

TEST(Umbrella, RejectsBadWeights) {
    EXPECT_THROW(umbrella(twisted_cubic(), QRow(3, Rational(1))), dimension_error);
    EXPECT_THROW(umbrella(twisted_cubic(), QRow(4, Rational(0))), validation_error);
}

TEST(Umbrella, ConsistencyCheckOnExamples) {
    for (const char* txt : {"1 2", "1 1 1 1; 0 1 2 3", "0 1 2 2; 2 1 1 0"}) {
        IntegerMatrix A = parse_matrix(txt);
        UmbrellaCheck check = umbrella_consistency_check(A, QRow(A.n, Rational(1)));
        EXPECT_TRUE(check.ok) << txt;
        EXPECT_EQ(check.dim, static_cast<int>(A.d)) << txt;
    }
}
