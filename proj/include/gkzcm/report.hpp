// Rendering of classification reports: a stable JSON shape (rationals as
// strings, insertion-ordered keys), csv and markdown rows for tables, and a
// human-readable text block. Rendering is pure so batch output is
// byte-identical regardless of scheduling.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gkzcm/classify.hpp"
#include "gkzcm/resolution.hpp"

namespace gkzcm {

using ordered_json = nlohmann::ordered_json;

inline std::string verdict_word(bool cm) { return cm ? "CM" : "not CM"; }

inline ordered_json summary_json(const HomologicalSummary& s) {
    ordered_json j;
    j["numvars"] = s.numvars;
    j["pd"] = s.pd;
    j["depth"] = s.depth;
    j["dim"] = s.dim;
    j["codim"] = s.codim;
    j["is_cm"] = s.is_cm;
    return j;
}

inline ordered_json report_json(const CMReport& r) {
    ordered_json j;
    j["matrix"] = r.matrix.rows;
    ordered_json beta = ordered_json::array();
    for (const auto& b : r.beta) beta.push_back(to_string(b));
    j["beta"] = beta;

    ordered_json verdicts;
    verdicts["semigroup_ring"] = r.cm_semigroup_ring;
    verdicts["groebner_deformation"] = r.cm_groebner_deformation;
    verdicts["gkz"] = r.cm_gkz;
    j["verdicts"] = verdicts;

    ordered_json summaries;
    summaries["semigroup_ring"] = summary_json(r.semigroup_ring);
    summaries["groebner_deformation"] = summary_json(r.groebner_deformation);
    summaries["gkz"] = summary_json(r.gkz);
    j["summaries"] = summaries;

    ordered_json diag;
    diag["umbrella_top_faces"] = r.umbrella_top_faces;
    diag["umbrella_consistent"] = r.umbrella_ok;
    diag["euler_shadow_dim"] = r.dim_euler_shadow;
    diag["euler_regular_sequence"] = r.euler_sequence.regular;
    diag["euler_failing_index"] = r.euler_sequence.failing_index;
    diag["euler_matches_deformation"] = r.euler_matches_deformation;
    diag["gr_contains_euler_shadow"] = r.gr_contains_euler_shadow;
    diag["gr_equals_euler_shadow"] = r.gr_equals_euler_shadow;
    ordered_json d2;
    d2["available"] = r.has_dim2_check;
    d2["is_cm"] = r.dim2_cm;
    d2["matches_resolution_verdict"] = r.dim2_matches;
    d2["note"] = r.dim2_note;
    diag["dim2_semigroup_check"] = d2;
    j["diagnostics"] = diag;
    return j;
}

inline std::string csv_header() {
    return "matrix,beta,semigroup_ring,groebner_deformation,gkz,"
           "semigroup_pd,semigroup_depth,semigroup_dim,"
           "deformation_pd,deformation_depth,deformation_dim,"
           "gkz_pd,gkz_depth,gkz_dim";
}

inline std::string csv_row(const CMReport& r) {
    std::string beta;
    for (size_t i = 0; i < r.beta.size(); ++i)
        beta += (i ? " " : "") + to_string(r.beta[i]);
    auto nums = [](const HomologicalSummary& s) {
        return std::to_string(s.pd) + "," + std::to_string(s.depth) + "," +
               std::to_string(s.dim);
    };
    return "\"" + to_string(r.matrix) + "\",\"" + beta + "\"," +
           verdict_word(r.cm_semigroup_ring) + "," + verdict_word(r.cm_groebner_deformation) +
           "," + verdict_word(r.cm_gkz) + "," + nums(r.semigroup_ring) + "," +
           nums(r.groebner_deformation) + "," + nums(r.gkz);
}

inline std::string markdown_header() {
    return "| matrix | C[NA] | R/in I_A | gr GKZ | pd | depth | dim |\n"
           "|---|---|---|---|---|---|---|";
}

inline std::string markdown_row(const CMReport& r) {
    auto triple = [&](auto field) {
        return std::to_string(field(r.semigroup_ring)) + ";" +
               std::to_string(field(r.groebner_deformation)) + ";" + std::to_string(field(r.gkz));
    };
    return "| " + to_string(r.matrix) + " | " + verdict_word(r.cm_semigroup_ring) + " | " +
           verdict_word(r.cm_groebner_deformation) + " | " + verdict_word(r.cm_gkz) + " | " +
           triple([](const HomologicalSummary& s) { return s.pd; }) + " | " +
           triple([](const HomologicalSummary& s) { return s.depth; }) + " | " +
           triple([](const HomologicalSummary& s) { return s.dim; }) + " |";
}

inline std::string text_report(const CMReport& r) {
    std::string out;
    out += "matrix: " + to_string(r.matrix) + "\n";
    out += "beta:";
    for (const auto& b : r.beta) out += " " + to_string(b);
    out += "\n";
    out += "semigroup ring C[NA]:      " + verdict_word(r.cm_semigroup_ring) + "\n";
    out += "deformation R/in I_A:      " + verdict_word(r.cm_groebner_deformation) + "\n";
    out += "graded GKZ module:         " + verdict_word(r.cm_gkz) + "\n";
    auto line = [&](const char* name, const HomologicalSummary& s) {
        out += std::string(name) + " pd=" + std::to_string(s.pd) +
               " depth=" + std::to_string(s.depth) + " dim=" + std::to_string(s.dim) +
               " codim=" + std::to_string(s.codim) + "\n";
    };
    line("  [semigroup ring]   ", r.semigroup_ring);
    line("  [deformation]      ", r.groebner_deformation);
    line("  [graded GKZ]       ", r.gkz);
    out += "umbrella: " + std::to_string(r.umbrella_top_faces) + " top faces, " +
           (r.umbrella_ok ? "consistent" : "INCONSISTENT") + "\n";
    out += "Euler operators regular on S/in I_A S: " +
           std::string(r.euler_sequence.regular ? "yes" : "no");
    if (!r.euler_sequence.regular)
        out += " (fails at position " + std::to_string(r.euler_sequence.failing_index) + ")";
    out += "\n";
    out += "in_(1,1) H equals in I_A S + <E>: " +
           std::string(r.gr_equals_euler_shadow ? "yes" : "no") + "\n";
    if (r.has_dim2_check) {
        out += "dim-2 semigroup criterion: " + verdict_word(r.dim2_cm) +
               (r.dim2_matches ? " (matches)" : " (MISMATCH)");
        if (!r.dim2_note.empty()) out += " [" + r.dim2_note + "]";
        out += "\n";
    } else if (!r.dim2_note.empty()) {
        out += "dim-2 semigroup criterion: " + r.dim2_note + "\n";
    }
    return out;
}

inline ordered_json betti_json(const BettiTable& b) {
    ordered_json rows = ordered_json::array();
    for (const auto& [key, value] : b.entries) {
        ordered_json e;
        e["i"] = key.first;
        e["degree"] = key.second;
        e["value"] = value;
        rows.push_back(e);
    }
    ordered_json j;
    j["entries"] = rows;
    j["totals"] = b.totals;
    return j;
}

inline std::string render_report(const CMReport& r, const std::string& format) {
    if (format == "json") return report_json(r).dump(2) + "\n";
    if (format == "csv") return csv_header() + "\n" + csv_row(r) + "\n";
    if (format == "markdown") return markdown_header() + "\n" + markdown_row(r) + "\n";
    if (format == "text") return text_report(r);
    throw validation_error("unknown format '" + format + "' (json, csv, markdown, text)");
}

}  // namespace gkzcm
