#include <gtest/gtest.h>

#include "gkzcm/gkzcm.hpp"

using namespace gkzcm;

namespace {

long long betti(const BettiTable& b, int i, DegreeVector d) {
    auto it = b.entries.find({i, d});
    return it == b.entries.end() ? 0 : it->second;
}

}  // namespace

TEST(Resolution, KoszulTwoVariables) {
    auto R = ring_ptr(PolyRing::standard({"x", "y"}));
    Ideal I(R, {Polynomial::variable(R, 0), Polynomial::variable(R, 1)});
    FreeResolution res = minimal_free_resolution(I);
    ASSERT_EQ(res.length(), 2u);
    EXPECT_TRUE(composes_to_zero(res));
    EXPECT_TRUE(hilbert_consistent(res, I));
    BettiTable b = betti_table(res);
    EXPECT_EQ(b.totals, (std::vector<long long>{1, 2, 1}));
    EXPECT_EQ(betti(b, 0, {0}), 1);
    EXPECT_EQ(betti(b, 1, {1}), 2);
    EXPECT_EQ(betti(b, 2, {2}), 1);
    // the single second syzygy is (y, -x) or (-y, x) against the right columns
    const ResolutionStep& last = res.steps[1];
    ASSERT_EQ(last.source_rank, 1u);
    ASSERT_EQ(last.cols[0].size(), 2u);
}

TEST(Resolution, KoszulThreeVariables) {
    auto R = ring_ptr(PolyRing::standard({"x", "y", "z"}));
    Ideal I(R, {Polynomial::variable(R, 0), Polynomial::variable(R, 1),
                Polynomial::variable(R, 2)});
    FreeResolution res = minimal_free_resolution(I);
    BettiTable b = betti_table(res);
    EXPECT_EQ(b.totals, (std::vector<long long>{1, 3, 3, 1}));
    EXPECT_TRUE(composes_to_zero(res));
    EXPECT_TRUE(hilbert_consistent(res, I));
    HomologicalSummary h = homological_summary(I);
    EXPECT_EQ(h.pd, 3u);
    EXPECT_EQ(h.depth, 0u);
    EXPECT_EQ(h.dim, 0u);
    EXPECT_TRUE(h.is_cm);
}

TEST(Resolution, TwistedCubicBetti) {
    auto R = ring_ptr(PolyRing::standard({"a", "b", "c", "d"}));
    Ideal I(R, {parse_polynomial(R, "a*c - b^2"), parse_polynomial(R, "a*d - b*c"),
                parse_polynomial(R, "b*d - c^2")});
    FreeResolution res = minimal_free_resolution(I);
    BettiTable b = betti_table(res);
    EXPECT_EQ(b.totals, (std::vector<long long>{1, 3, 2}));
    EXPECT_EQ(betti(b, 1, {2}), 3);
    EXPECT_EQ(betti(b, 2, {3}), 2);
    EXPECT_TRUE(composes_to_zero(res));
    EXPECT_TRUE(hilbert_consistent(res, I));
    HomologicalSummary h = homological_summary(I);
    EXPECT_EQ(h.pd, 2u);
    EXPECT_EQ(h.depth, 2u);
    EXPECT_EQ(h.dim, 2u);
    EXPECT_EQ(h.codim, 2u);
    EXPECT_TRUE(h.is_cm);
}

TEST(Resolution, NonCohenMacaulayExample) {
    // two skew lines in P^3: depth 1 < dim 2
    auto R = ring_ptr(PolyRing::standard({"x", "y", "z", "w"}));
    Ideal I(R, {parse_polynomial(R, "x*z"), parse_polynomial(R, "x*w"),
                parse_polynomial(R, "y*z"), parse_polynomial(R, "y*w")});
    HomologicalSummary h = homological_summary(I);
    EXPECT_EQ(h.dim, 2u);
    EXPECT_EQ(h.pd, 3u);
    EXPECT_EQ(h.depth, 1u);
    EXPECT_FALSE(h.is_cm);
    FreeResolution res = minimal_free_resolution(I);
    EXPECT_TRUE(composes_to_zero(res));
    EXPECT_TRUE(hilbert_consistent(res, I));
}

TEST(Resolution, PrincipalIdeal) {
    auto R = ring_ptr(PolyRing::standard({"x", "y"}));
    Ideal I(R, {parse_polynomial(R, "x^2 + y^2")});
    FreeResolution res = minimal_free_resolution(I);
    EXPECT_EQ(res.length(), 1u);
    BettiTable b = betti_table(res);
    EXPECT_EQ(b.totals, (std::vector<long long>{1, 1}));
    EXPECT_EQ(betti(b, 1, {2}), 1);
}

TEST(Resolution, UnitIdealRejected) {
    auto R = ring_ptr(PolyRing::standard({"x"}));
    EXPECT_THROW(minimal_free_resolution(Ideal(R, {Polynomial::constant(R, 2)})),
                 empty_variety_error);
}

TEST(Resolution, StaircaseTextFrozen) {
    auto R = ring_ptr(PolyRing::standard({"a", "b", "c", "d"}));
    Ideal I(R, {parse_polynomial(R, "a*c - b^2"), parse_polynomial(R, "a*d - b*c"),
                parse_polynomial(R, "b*d - c^2")});
    std::string text = staircase_text(betti_table(minimal_free_resolution(I)));
    EXPECT_EQ(text,
              "       0 1 2\n"
              "total: 1 3 2\n"
              "    0: 1 . .\n"
              "    1: . 3 2\n");
}

TEST(Resolution, MultigradedShifts) {
    auto R = ring_ptr(PolyRing::graded({"x", "y"}, {{1, 0}, {0, 1}}));
    Ideal I(R, {Polynomial::variable(R, 0), Polynomial::variable(R, 1)});
    BettiTable b = betti_table(minimal_free_resolution(I));
    EXPECT_EQ(betti(b, 1, {1, 0}), 1);
    EXPECT_EQ(betti(b, 1, {0, 1}), 1);
    EXPECT_EQ(betti(b, 2, {1, 1}), 1);
}

TEST(GradedBetti, AgreesWithMinimizedResolution) {
    auto same = [](const Ideal& I) {
        BettiTable direct = graded_betti(I);
        BettiTable minimized = betti_table(minimal_free_resolution(I));
        return direct.entries == minimized.entries && direct.totals == minimized.totals;
    };
    auto R3 = ring_ptr(PolyRing::standard({"x", "y", "z"}));
    EXPECT_TRUE(same(Ideal(R3, {Polynomial::variable(R3, 0), Polynomial::variable(R3, 1),
                                Polynomial::variable(R3, 2)})));
    auto R = ring_ptr(PolyRing::standard({"a", "b", "c", "d"}));
    EXPECT_TRUE(same(Ideal(R, {parse_polynomial(R, "a*c - b^2"), parse_polynomial(R, "a*d - b*c"),
                               parse_polynomial(R, "b*d - c^2")})));
    auto R4 = ring_ptr(PolyRing::standard({"x", "y", "z", "w"}));
    EXPECT_TRUE(same(Ideal(R4, {parse_polynomial(R4, "x*z"), parse_polynomial(R4, "x*w"),
                                parse_polynomial(R4, "y*z"), parse_polynomial(R4, "y*w")})));
    auto M = ring_ptr(PolyRing::graded({"x", "y"}, {{1, 0}, {0, 1}}));
    EXPECT_TRUE(same(Ideal(M, {Polynomial::variable(M, 0), Polynomial::variable(M, 1)})));
}

TEST(GradedBetti, ZeroIdealIsFree) {
    auto R = ring_ptr(PolyRing::standard({"x", "y"}));
    BettiTable b = graded_betti(Ideal(R, {}));
    EXPECT_EQ(b.totals, (std::vector<long long>{1}));
    HomologicalSummary h = homological_summary(Ideal(R, {}));
    EXPECT_EQ(h.pd, 0u);
    EXPECT_EQ(h.dim, 2u);
    EXPECT_TRUE(h.is_cm);
}

TEST(Syzygies, ColumnsAnnihilateGenerators) {
    auto R = ring_ptr(PolyRing::standard({"a", "b", "c", "d"}));
    std::vector<Polynomial> gens{parse_polynomial(R, "a*c - b^2"),
                                 parse_polynomial(R, "a*d - b*c"),
                                 parse_polynomial(R, "b*d - c^2")};
    ResolutionStep syz = syzygies(gens);
    EXPECT_EQ(syz.target_rank, gens.size());
    EXPECT_GE(syz.source_rank, 2u);
    for (const auto& col : syz.cols) {
        Polynomial sum = Polynomial::zero(R);
        for (const auto& [r, p] : col) sum = sum + p * gens[r];
        EXPECT_TRUE(sum.is_zero());
    }
}

TEST(Syzygies, ZeroGeneratorGetsUnitRow) {
    auto R = ring_ptr(PolyRing::standard({"x", "y"}));
    std::vector<Polynomial> gens{Polynomial::variable(R, 0), Polynomial::zero(R),
                                 Polynomial::variable(R, 1)};
    ResolutionStep syz = syzygies(gens);
    bool unit_row_found = false;
    for (const auto& col : syz.cols)
        if (col.size() == 1 && col.count(1) &&
            col.at(1) == Polynomial::constant(R, 1))
            unit_row_found = true;
    EXPECT_TRUE(unit_row_found);
    for (const auto& col : syz.cols) {
        Polynomial sum = Polynomial::zero(R);
        for (const auto& [r, p] : col) sum = sum + p * gens[r];
        EXPECT_TRUE(sum.is_zero());
    }
}

TEST(Syzygies, InhomogeneousRejected) {
    auto R = ring_ptr(PolyRing::standard({"x", "y"}));
    EXPECT_THROW(syzygies({parse_polynomial(R, "x^2 + y")}), grading_error);
}

TEST(Hilbert, QuotientFunctionValues) {
    auto R = ring_ptr(PolyRing::standard({"x", "y", "z"}));
    // hypersurface of degree 2: h(t) = C(t+2,2) - C(t,2)
    Ideal I(R, {parse_polynomial(R, "x*y - z^2")});
    EXPECT_EQ(hilbert_function_quotient(I, 0), 1);
    EXPECT_EQ(hilbert_function_quotient(I, 1), 3);
    EXPECT_EQ(hilbert_function_quotient(I, 2), 5);
    EXPECT_EQ(hilbert_function_quotient(I, 3), 7);
}
