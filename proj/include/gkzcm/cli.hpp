// Command-line front end: subcommands toric, classify, table, umbrella,
// resolve. Progress goes to standard error (GKZCM_LOG sets the level);
// standard output carries the rendered result only, byte-identical for any
// --jobs value. Exit codes: 0 success, 1 a validation or computation
// failure, 2 internal errors and usage errors.
#pragma once

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "gkzcm/poly_io.hpp"
#include "gkzcm/report.hpp"

namespace gkzcm {
namespace cli {

inline int log_level() {
    static const int level = [] {
        const char* v = std::getenv("GKZCM_LOG");
        return v ? std::atoi(v) : 0;
    }();
    return level;
}

inline void log(int level, const std::string& msg) {
    if (log_level() < level) return;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    std::cerr << "[gkzcm] " << msg << "\n";
}

// The five example matrices of the comparison table.
inline const std::vector<std::string>& example_matrices() {
    static const std::vector<std::string> rows = {
        "0 1 2 2; 2 1 1 0",
        "0 1 2 3; 1 1 0 0",
        "0 1 2 3; 1 2 0 0",
        "0 1 2 3; 1 2 2 0",
        "1 2 3 4 5; 3 1 3 2 0",
    };
    return rows;
}

inline std::vector<Rational> parse_beta(const std::string& text) {
    std::vector<Rational> beta;
    std::istringstream ss(text);
    std::string tok;
    while (ss >> tok) beta.push_back(parse_rational(tok));
    return beta;
}

inline std::vector<std::string> read_batch_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open batch file '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

struct RowResult {
    std::string matrix_text;
    bool ok = false;
    CMReport report;
    std::string error;
};

inline std::vector<RowResult> run_rows(const std::vector<std::string>& rows,
                                       const std::vector<Rational>& beta, long long box,
                                       int jobs) {
    std::vector<RowResult> results(rows.size());
    std::atomic<size_t> next{0};
    std::mutex fatal_mu;
    std::exception_ptr fatal;  // internal errors abort the batch, after join
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < rows.size();) {
            results[i].matrix_text = rows[i];
            try {
                IntegerMatrix A = parse_matrix(rows[i]);
                results[i].report = classify(A, beta, box);
                results[i].ok = true;
            } catch (const internal_error&) {
                std::lock_guard<std::mutex> lock(fatal_mu);
                if (!fatal) fatal = std::current_exception();
            } catch (const std::exception& e) {
                results[i].error = e.what();
            }
            log(1, "row " + std::to_string(i + 1) + "/" + std::to_string(rows.size()) +
                       " done: " + rows[i]);
        }
    };
    jobs = std::max(jobs, 1);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (fatal) std::rethrow_exception(fatal);
    return results;
}

inline std::string render_table(const std::vector<RowResult>& rows, const std::string& format) {
    std::ostringstream out;
    if (format == "markdown") {
        out << markdown_header() << "\n";
        for (const auto& r : rows) {
            if (r.ok)
                out << markdown_row(r.report) << "\n";
            else
                out << "| " << r.matrix_text << " | error: " << r.error << " |  |  |  |  |  |\n";
        }
    } else if (format == "csv") {
        out << csv_header() << "\n";
        for (const auto& r : rows) {
            if (r.ok)
                out << csv_row(r.report) << "\n";
            else
                out << "\"" << r.matrix_text << "\",\"error: " << r.error << "\"\n";
        }
    } else if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            if (r.ok) {
                arr.push_back(report_json(r.report));
            } else {
                ordered_json e;
                e["matrix"] = r.matrix_text;
                e["error"] = r.error;
                arr.push_back(e);
            }
        }
        out << arr.dump(2) << "\n";
    } else if (format == "text") {
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i) out << "\n";
            if (rows[i].ok)
                out << text_report(rows[i].report);
            else
                out << "matrix: " << rows[i].matrix_text << "\nerror: " << rows[i].error << "\n";
        }
    } else {
        throw validation_error("unknown format '" + format + "' (json, csv, markdown, text)");
    }
    return out.str();
}

inline int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Cohen-Macaulay classification of GKZ systems by exact Groebner deformation"};
    app.require_subcommand(1);

    std::string matrix_text, file_path, beta_text, weights_text, vars_text, gens_text;
    std::string format;
    int jobs = 1;
    long long box = 0;
    int max_vars = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format: text, json, csv, markdown");
        sub->add_option("--beta", beta_text, "Rational beta entries, whitespace separated");
        sub->add_option("--box", box, "Verification bound for semigroup searches");
        sub->add_option("--max-vars", max_vars,
                        "Override the variable cap of the dimension search");
    };

    CLI::App* toric_cmd = app.add_subcommand("toric", "Reduced Groebner basis of the toric ideal");
    toric_cmd->add_option("--matrix", matrix_text, "Matrix text, rows ';'-separated")->required();
    add_common(toric_cmd);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "The three Cohen-Macaulay verdicts for one matrix");
    classify_cmd->add_option("--matrix", matrix_text, "Matrix text, rows ';'-separated")
        ->required();
    add_common(classify_cmd);
    classify_cmd->add_option("--jobs", jobs, "Worker threads (accepted for symmetry)");

    CLI::App* table_cmd =
        app.add_subcommand("table", "Verdict table for a batch of matrices");
    auto* tm = table_cmd->add_option("--matrix", matrix_text, "Single matrix text");
    auto* tf = table_cmd->add_option("--file", file_path, "Batch file, one matrix per line");
    tm->excludes(tf);
    tf->excludes(tm);
    table_cmd->add_option("--jobs", jobs, "Worker threads");
    add_common(table_cmd);

    CLI::App* umbrella_cmd = app.add_subcommand("umbrella", "Faces of the L-umbrella of A");
    umbrella_cmd->add_option("--matrix", matrix_text, "Matrix text, rows ';'-separated")
        ->required();
    umbrella_cmd->add_option("--weights", weights_text,
                             "Positive rational weights L, one per column (default all 1)");
    add_common(umbrella_cmd);

    CLI::App* resolve_cmd =
        app.add_subcommand("resolve", "Minimal free resolution of a homogeneous ideal");
    resolve_cmd->add_option("--vars", vars_text, "Variable names, whitespace separated")
        ->required();
    resolve_cmd->add_option("--gens", gens_text, "Generators, ','-separated polynomial text")
        ->required();
    add_common(resolve_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (max_vars > 0) config::max_dimension_vars = max_vars;
        if (format.empty()) format = table_cmd->parsed() ? "markdown" : "text";
        std::vector<Rational> beta = parse_beta(beta_text);

        if (toric_cmd->parsed()) {
            IntegerMatrix A = parse_matrix(matrix_text);
            GroebnerBasis gb = buchberger(toric_ideal(A));
            if (format == "json") {
                ordered_json j;
                j["matrix"] = A.rows;
                ordered_json gens = ordered_json::array();
                for (const auto& g : gb.elements) gens.push_back(to_string(g));
                j["generators"] = gens;
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& g : gb.elements) std::cout << to_string(g) << "\n";
            }
            return 0;
        }

        if (classify_cmd->parsed()) {
            IntegerMatrix A = parse_matrix(matrix_text);
            log(1, "classifying " + matrix_text);
            CMReport rep = classify(A, beta, box);
            std::cout << render_report(rep, format);
            return 0;
        }

        if (table_cmd->parsed()) {
            std::vector<std::string> rows;
            if (!file_path.empty())
                rows = read_batch_lines(file_path);
            else if (!matrix_text.empty())
                rows.push_back(matrix_text);
            else
                rows = example_matrices();
            std::vector<RowResult> results = run_rows(rows, beta, box, jobs);
            std::cout << render_table(results, format);
            for (const auto& r : results)
                if (!r.ok) return 1;
            return 0;
        }

        if (umbrella_cmd->parsed()) {
            IntegerMatrix A = parse_matrix(matrix_text);
            std::vector<Rational> L(A.n, Rational(1));
            if (!weights_text.empty()) {
                L.clear();
                std::istringstream ss(weights_text);
                std::string tok;
                while (ss >> tok) L.push_back(parse_rational(tok));
            }
            Umbrella um = umbrella(A, L);
            UmbrellaCheck check = umbrella_consistency_check(A, L);
            auto face_text = [](const UmbrellaFace& f) {
                std::string s = "{";
                for (size_t k = 0; k < f.columns.size(); ++k)
                    s += (k ? "," : "") + std::to_string(f.columns[k] + 1);
                s += "} dim=" + std::to_string(f.dim) + " covector=(";
                for (size_t k = 0; k < f.covector.size(); ++k)
                    s += (k ? "," : "") + to_string(f.covector[k]);
                return s + ")";
            };
            if (format == "json") {
                ordered_json j;
                j["matrix"] = A.rows;
                auto faces_json = [&](const std::vector<UmbrellaFace>& fs) {
                    ordered_json arr = ordered_json::array();
                    for (const auto& f : fs) {
                        ordered_json e;
                        ordered_json cols = ordered_json::array();
                        for (int c : f.columns) cols.push_back(c + 1);
                        e["columns"] = cols;
                        e["dim"] = f.dim;
                        ordered_json cv = ordered_json::array();
                        for (const auto& v : f.covector) cv.push_back(to_string(v));
                        e["covector"] = cv;
                        arr.push_back(e);
                    }
                    return arr;
                };
                j["faces"] = faces_json(um.faces);
                j["top_faces"] = faces_json(um.top_faces);
                j["consistent"] = check.ok;
                j["dim"] = check.dim;
                ordered_json fails = ordered_json::array();
                for (const auto& f : check.failures) fails.push_back(f);
                j["failures"] = fails;
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& f : um.faces) std::cout << face_text(f) << "\n";
                std::cout << "top faces: " << um.top_faces.size() << "\n";
                std::cout << "consistency: " << (check.ok ? "ok" : "FAILED") << "\n";
                for (const auto& f : check.failures) std::cout << "  " << f << "\n";
            }
            return check.ok ? 0 : 1;
        }

        if (resolve_cmd->parsed()) {
            std::vector<std::string> names;
            std::istringstream vs(vars_text);
            std::string tok;
            while (vs >> tok) names.push_back(tok);
            RingPtr R = ring_ptr(PolyRing::standard(names));
            std::vector<Polynomial> gens;
            std::string piece;
            std::stringstream gs(gens_text);
            while (std::getline(gs, piece, ','))
                gens.push_back(parse_polynomial(R, piece));
            Ideal I(R, std::move(gens));
            FreeResolution res = minimal_free_resolution(I);
            BettiTable betti = betti_table(res);
            HomologicalSummary sum = homological_summary(I);
            if (format == "json") {
                ordered_json j;
                j["betti"] = betti_json(betti);
                j["summary"] = summary_json(sum);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << staircase_text(betti) << "pd=" << sum.pd << " depth=" << sum.depth
                          << " dim=" << sum.dim << " codim=" << sum.codim
                          << " cm=" << (sum.is_cm ? "yes" : "no") << "\n";
            }
            return 0;
        }
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cli
}  // namespace gkzcm
