#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "gkzcm/cli.hpp"
#include "gkzcm/gkzcm.hpp"

using namespace gkzcm;

namespace {

// capture stdout of a run_cli invocation
int run_captured(std::vector<const char*> args, std::string& out) {
    args.insert(args.begin(), "gkzcm");
    std::ostringstream buf;
    std::streambuf* old = std::cout.rdbuf(buf.rdbuf());
    int code = cli::run_cli(static_cast<int>(args.size()), args.data());
    std::cout.rdbuf(old);
    out = buf.str();
    return code;
}

}  // namespace

TEST(Classify, AllThreeVerdictsPositive) {
    CMReport r = classify(parse_matrix("0 1 2 2; 2 1 1 0"));
    EXPECT_TRUE(r.cm_semigroup_ring);
    EXPECT_TRUE(r.cm_groebner_deformation);
    EXPECT_TRUE(r.cm_gkz);
    EXPECT_EQ(r.semigroup_ring.dim, 2u);
    EXPECT_EQ(r.groebner_deformation.dim, 2u);
    EXPECT_EQ(r.gkz.dim, 4u);
    EXPECT_EQ(r.gkz.numvars, 8u);
    EXPECT_EQ(r.dim_euler_shadow, 4);
    EXPECT_TRUE(r.euler_sequence.regular);
    EXPECT_TRUE(r.euler_matches_deformation);
    EXPECT_TRUE(r.gr_contains_euler_shadow);
    EXPECT_TRUE(r.gr_equals_euler_shadow);
    EXPECT_TRUE(r.umbrella_ok);
    EXPECT_EQ(r.umbrella_top_faces, 2u);
    EXPECT_TRUE(r.has_dim2_check);
    EXPECT_TRUE(r.dim2_cm);
    EXPECT_TRUE(r.dim2_matches);
}

TEST(Classify, SplitVerdicts) {
    // deformation fails CM while the semigroup ring and GKZ module differ
    CMReport r = classify(parse_matrix("0 1 2 3; 1 1 0 0"));
    EXPECT_FALSE(r.cm_semigroup_ring);
    EXPECT_FALSE(r.cm_groebner_deformation);
    EXPECT_TRUE(r.cm_gkz);
    EXPECT_FALSE(r.euler_sequence.regular);
    EXPECT_TRUE(r.euler_matches_deformation);
    EXPECT_TRUE(r.gr_contains_euler_shadow);
    EXPECT_FALSE(r.gr_equals_euler_shadow);
    EXPECT_TRUE(r.has_dim2_check);
    EXPECT_FALSE(r.dim2_cm);
    EXPECT_TRUE(r.dim2_matches);
    EXPECT_NE(r.dim2_note.find("hole"), std::string::npos);
}

TEST(Classify, BetaValidation) {
    IntegerMatrix A = parse_matrix("1 2");
    EXPECT_NO_THROW(classify(A, {Rational(1, 2)}));
    EXPECT_THROW(classify(A, {Rational(1), Rational(2)}), dimension_error);
    EXPECT_THROW(classify(make_matrix({{1, -1}})), validation_error);
}

TEST(Report, JsonShapeAndDeterminism) {
    CMReport r = classify(parse_matrix("0 1 2 2; 2 1 1 0"));
    std::string once = render_report(r, "json");
    std::string twice = render_report(r, "json");
    EXPECT_EQ(once, twice);

    ordered_json j = ordered_json::parse(once);
    EXPECT_EQ(j["matrix"][0], (std::vector<long long>{0, 1, 2, 2}));
    EXPECT_EQ(j["beta"], (std::vector<std::string>{"0", "0"}));
    EXPECT_TRUE(j["verdicts"]["semigroup_ring"].get<bool>());
    EXPECT_TRUE(j["verdicts"]["groebner_deformation"].get<bool>());
    EXPECT_TRUE(j["verdicts"]["gkz"].get<bool>());
    for (const char* key : {"semigroup_ring", "groebner_deformation", "gkz"}) {
        EXPECT_TRUE(j["summaries"][key].contains("pd"));
        EXPECT_TRUE(j["summaries"][key].contains("depth"));
        EXPECT_TRUE(j["summaries"][key].contains("dim"));
        EXPECT_TRUE(j["summaries"][key].contains("is_cm"));
    }
    EXPECT_TRUE(j["diagnostics"].contains("umbrella_top_faces"));
    EXPECT_TRUE(j["diagnostics"].contains("euler_regular_sequence"));
    EXPECT_TRUE(j["diagnostics"].contains("gr_equals_euler_shadow"));
    EXPECT_TRUE(j["diagnostics"]["dim2_semigroup_check"].contains("available"));
}

TEST(Report, CsvAndMarkdownCarryVerdictsAndNumbers) {
    CMReport r = classify(parse_matrix("0 1 2 2; 2 1 1 0"));
    std::string csv = csv_row(r);
    EXPECT_NE(csv.find("\"0 1 2 2; 2 1 1 0\""), std::string::npos);
    EXPECT_NE(csv.find("CM,CM,CM"), std::string::npos);
    // 14 columns
    EXPECT_EQ(std::count(csv.begin(), csv.end(), ','), 13);
    std::string md = markdown_row(r);
    EXPECT_NE(md.find("| CM | CM | CM |"), std::string::npos);
}

TEST(Report, MarkdownKeepsTheNegativeTriple) {
    CMReport r = classify(parse_matrix("0 1 2 3; 1 2 0 0"));
    EXPECT_FALSE(r.cm_semigroup_ring);
    EXPECT_FALSE(r.cm_groebner_deformation);
    EXPECT_FALSE(r.cm_gkz);
    std::string md = markdown_row(r);
    EXPECT_NE(md.find("not CM | not CM | not CM"), std::string::npos);
}

TEST(Report, TextBlockNamesEverything) {
    CMReport r = classify(parse_matrix("1 2"), {Rational(1, 2)});
    std::string text = text_report(r);
    EXPECT_NE(text.find("matrix: 1 2"), std::string::npos);
    EXPECT_NE(text.find("beta: 1/2"), std::string::npos);
    EXPECT_NE(text.find("semigroup ring"), std::string::npos);
    EXPECT_NE(text.find("umbrella"), std::string::npos);
    EXPECT_THROW(render_report(r, "yaml"), validation_error);
}

TEST(Report, BettiJsonShape) {
    auto R = ring_ptr(PolyRing::standard({"x", "y"}));
    Ideal I(R, {Polynomial::variable(R, 0), Polynomial::variable(R, 1)});
    ordered_json j = betti_json(betti_table(minimal_free_resolution(I)));
    EXPECT_EQ(j["totals"], (std::vector<long long>{1, 2, 1}));
    ASSERT_EQ(j["entries"].size(), 3u);
    EXPECT_EQ(j["entries"][0]["i"], 0);
    EXPECT_EQ(j["entries"][0]["degree"], (std::vector<long long>{0}));
    EXPECT_EQ(j["entries"][0]["value"], 1);
}

TEST(Table, ErrorRowsAreRendered) {
    std::vector<cli::RowResult> rows(1);
    rows[0].matrix_text = "junk";
    rows[0].error = "boom";
    EXPECT_NE(cli::render_table(rows, "markdown").find("| junk | error: boom |"),
              std::string::npos);
    EXPECT_NE(cli::render_table(rows, "csv").find("\"junk\",\"error: boom\""),
              std::string::npos);
    ordered_json j = ordered_json::parse(cli::render_table(rows, "json"));
    EXPECT_EQ(j[0]["error"], "boom");
    EXPECT_THROW(cli::render_table(rows, "yaml"), validation_error);
}

TEST(Table, BatchIsOrderStableAcrossJobs) {
    std::vector<std::string> rows{"1 2", "not a matrix", "1 1; 0 1"};
    auto serial = cli::run_rows(rows, {}, 0, 1);
    auto parallel = cli::run_rows(rows, {}, 0, 3);
    ASSERT_EQ(serial.size(), parallel.size());
    EXPECT_EQ(cli::render_table(serial, "csv"), cli::render_table(parallel, "csv"));
    EXPECT_TRUE(serial[0].ok);
    EXPECT_FALSE(serial[1].ok);
    EXPECT_TRUE(serial[2].ok);
}

TEST(Cli, ToricSubcommand) {
    std::string out;
    int code = run_captured({"toric", "--matrix", "1 2"}, out);
    EXPECT_EQ(code, 0);
    EXPECT_EQ(out, "d1^2-d2\n");
}

TEST(Cli, ClassifyTextAndJson) {
    std::string out;
    EXPECT_EQ(run_captured({"classify", "--matrix", "1 2"}, out), 0);
    EXPECT_NE(out.find("semigroup ring"), std::string::npos);
    EXPECT_EQ(run_captured({"classify", "--matrix", "1 2", "--format", "json"}, out), 0);
    EXPECT_NO_THROW(ordered_json::parse(out));
}

TEST(Cli, UmbrellaSubcommand) {
    std::string out;
    EXPECT_EQ(run_captured({"umbrella", "--matrix", "1 2"}, out), 0);
    EXPECT_NE(out.find("{2} dim=0 covector=(1/2)"), std::string::npos);
    EXPECT_NE(out.find("top faces: 1"), std::string::npos);
    EXPECT_NE(out.find("consistency: ok"), std::string::npos);
}

TEST(Cli, ResolveSubcommand) {
    std::string out;
    EXPECT_EQ(run_captured({"resolve", "--vars", "x y", "--gens", "x, y"}, out), 0);
    EXPECT_NE(out.find("total: 1 2 1"), std::string::npos);
    EXPECT_NE(out.find("pd=2 depth=0 dim=0 codim=2 cm=yes"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    std::string out;
    EXPECT_EQ(run_captured({"classify", "--matrix", "1 -1"}, out), 1);
    EXPECT_EQ(run_captured({"nonsense"}, out), 2);
    EXPECT_EQ(run_captured({"classify"}, out), 2);  // missing required option
    EXPECT_EQ(run_captured({"table", "--file", "/nonexistent/batch.txt"}, out), 1);
}
