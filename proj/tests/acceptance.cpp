// Acceptance checks for the whole pipeline. Each criterion prints exactly
// one [PASS]/[FAIL] line; the binary exits nonzero if any fail. The
// Groebner verification switch stays on for every computation here, so all
// bases are re-checked from scratch (every S-pair and every input generator
// reduces to zero) as a side effect of whatever runs.
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gkzcm/cli.hpp"
#include "gkzcm/gkzcm.hpp"
#include "support/oracles.hpp"

using namespace gkzcm;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << idx << ": " << what;
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n" << std::flush;
    if (!ok) ++failures;
}

template <typename F>
void criterion(int idx, const std::string& what, F body) {
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(idx, what, ok, detail);
}

struct Verdicts {
    bool semigroup, deformation, gkz;
};

const std::vector<Verdicts>& expected_verdicts() {
    static const std::vector<Verdicts> v = {
        {true, true, true},    // 0 1 2 2; 2 1 1 0
        {false, false, true},  // 0 1 2 3; 1 1 0 0
        {false, false, false}, // 0 1 2 3; 1 2 0 0
        {true, false, false},  // 0 1 2 3; 1 2 2 0
        {true, false, true},   // 1 2 3 4 5; 3 1 3 2 0
    };
    return v;
}

// both directions of the enumeration comparison; see tests/support/oracles.hpp
bool toric_matches_enumeration(const IntegerMatrix& A, int bound, std::string& detail) {
    Ideal ia = toric_ideal(A);
    GroebnerBasis gb = buchberger(ia);
    Ideal listed = oracles::toric_by_enumeration(A, ia.ring, bound);
    for (const auto& g : listed.gens)
        if (!normal_form(g, gb).is_zero()) {
            detail = "enumerated binomial outside I_A: " + to_string(g);
            return false;
        }
    for (const auto& g : gb.elements) {
        if (g.degree() > bound) {
            detail = "basis element above the enumeration bound: " + to_string(g);
            return false;
        }
        bool found = false;
        for (const auto& h : listed.gens)
            if (h == g || h == -g) found = true;
        if (!found) {
            detail = "basis element missing from the enumeration: " + to_string(g);
            return false;
        }
    }
    return true;
}

std::vector<IntegerMatrix> random_valid_matrices(size_t count) {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> entry(0, 4);
    std::vector<IntegerMatrix> out;
    while (out.size() < count) {
        std::vector<std::vector<long long>> rows(2, std::vector<long long>(4));
        for (auto& row : rows)
            for (auto& x : row) x = entry(rng);
        IntegerMatrix A = make_matrix(rows);
        if (check_matrix(A).ok()) out.push_back(std::move(A));
    }
    return out;
}

}  // namespace

int main() {
    config::verify_groebner_output.store(true);

    std::vector<CMReport> paper;          // classified example rows, in order
    std::vector<CMReport> randoms;        // classified random matrices
    std::vector<IntegerMatrix> matrices;  // the example rows as matrices
    for (const auto& txt : cli::example_matrices()) matrices.push_back(parse_matrix(txt));

    criterion(1, "verdict table over the example rows (serial and parallel agree, under 5 minutes)",
              [&](std::string& detail) {
                  auto t0 = std::chrono::steady_clock::now();
                  auto serial = cli::run_rows(cli::example_matrices(), {}, 0, 1);
                  double secs = std::chrono::duration<double>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count();
                  for (size_t i = 0; i < serial.size(); ++i) {
                      if (!serial[i].ok) {
                          detail = "row " + std::to_string(i + 1) + " failed: " + serial[i].error;
                          return false;
                      }
                      const CMReport& r = serial[i].report;
                      const Verdicts& e = expected_verdicts()[i];
                      if (r.cm_semigroup_ring != e.semigroup ||
                          r.cm_groebner_deformation != e.deformation || r.cm_gkz != e.gkz) {
                          detail = "row " + std::to_string(i + 1) + " verdicts differ from (" +
                                   verdict_word(e.semigroup) + ", " + verdict_word(e.deformation) +
                                   ", " + verdict_word(e.gkz) + ")";
                          return false;
                      }
                      paper.push_back(r);
                  }
                  auto parallel = cli::run_rows(cli::example_matrices(), {}, 0, 3);
                  if (cli::render_table(serial, "markdown") !=
                      cli::render_table(parallel, "markdown")) {
                      detail = "parallel rendering differs from serial";
                      return false;
                  }
                  if (secs >= 300.0) {
                      detail = "table took " + std::to_string(secs) + "s";
                      return false;
                  }
                  return true;
              });

    criterion(2, "toric ideals match degree-12 binomial enumeration on all example matrices",
              [&](std::string& detail) {
                  std::vector<IntegerMatrix> subjects = matrices;
                  subjects.push_back(make_matrix({{1, 2}}));
                  subjects.push_back(make_matrix({{1, 1, 1, 1}, {0, 1, 2, 3}}));
                  for (const auto& A : subjects) {
                      if (!toric_matches_enumeration(A, 12, detail)) {
                          detail = to_string(A) + ": " + detail;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(3, "every Groebner basis passes the from-scratch S-pair and generator check",
              [&](std::string& detail) {
                  if (!config::verify_groebner_output.load()) {
                      detail = "verification switch is off";
                      return false;
                  }
                  std::vector<IntegerMatrix> subjects = matrices;
                  subjects.push_back(make_matrix({{1, 2}}));
                  subjects.push_back(make_matrix({{1, 1, 1, 1}, {0, 1, 2, 3}}));
                  for (const auto& A : subjects) {
                      Ideal ia = toric_ideal(A);
                      if (!verify_groebner(buchberger(ia), ia.gens)) {
                          detail = "toric basis of " + to_string(A) + " failed";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(4, "CM of the deformation implies CM of the GKZ module and the semigroup ring "
                 "(example rows plus 20 random matrices)",
              [&](std::string& detail) {
                  if (paper.size() != matrices.size()) {
                      detail = "example classifications unavailable";
                      return false;
                  }
                  for (const auto& A : random_valid_matrices(20)) randoms.push_back(classify(A));
                  std::vector<const CMReport*> all;
                  for (const auto& r : paper) all.push_back(&r);
                  for (const auto& r : randoms) all.push_back(&r);
                  for (const CMReport* r : all)
                      if (r->cm_groebner_deformation && !(r->cm_gkz && r->cm_semigroup_ring)) {
                          detail = "implication fails for " + to_string(r->matrix);
                          return false;
                      }
                  return true;
              });

    criterion(5, "when the deformation is CM, in_(1,1) H equals in I_A S + <E> exactly",
              [&](std::string& detail) {
                  size_t applicable = 0;
                  std::vector<const CMReport*> all;
                  for (const auto& r : paper) all.push_back(&r);
                  for (const auto& r : randoms) all.push_back(&r);
                  if (all.empty()) {
                      detail = "no classifications available";
                      return false;
                  }
                  for (const CMReport* r : all) {
                      if (!r->cm_groebner_deformation) continue;
                      ++applicable;
                      if (!r->gr_equals_euler_shadow) {
                          detail = "equality fails for " + to_string(r->matrix);
                          return false;
                      }
                  }
                  if (applicable == 0) {
                      detail = "no CM deformation cases seen";
                      return false;
                  }
                  return true;
              });

    criterion(6, "the deformation verdict coincides with Euler-operator regularity everywhere",
              [&](std::string& detail) {
                  std::vector<const CMReport*> all;
                  for (const auto& r : paper) all.push_back(&r);
                  for (const auto& r : randoms) all.push_back(&r);
                  if (all.empty()) {
                      detail = "no classifications available";
                      return false;
                  }
                  for (const CMReport* r : all)
                      if (!r->euler_matches_deformation) {
                          detail = "mismatch for " + to_string(r->matrix);
                          return false;
                      }
                  return true;
              });

    criterion(7, "dimensions: dim R/in I_A = 2, dim S/in_(1,1) H = n, dim of in I_A S + <E> = n",
              [&](std::string& detail) {
                  if (paper.size() != matrices.size()) {
                      detail = "example classifications unavailable";
                      return false;
                  }
                  for (size_t i = 0; i < paper.size(); ++i) {
                      const CMReport& r = paper[i];
                      size_t n = matrices[i].n;
                      if (r.groebner_deformation.dim != 2 || r.gkz.dim != n ||
                          r.dim_euler_shadow != static_cast<int>(n)) {
                          detail = "row " + std::to_string(i + 1) + " has dims " +
                                   std::to_string(r.groebner_deformation.dim) + "/" +
                                   std::to_string(r.gkz.dim) + "/" +
                                   std::to_string(r.dim_euler_shadow);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(8, "the lattice-point criterion agrees with the semigroup-ring verdict on the "
                 "example rows",
              [&](std::string& detail) {
                  if (paper.size() != matrices.size()) {
                      detail = "example classifications unavailable";
                      return false;
                  }
                  for (size_t i = 0; i < paper.size(); ++i) {
                      if (!paper[i].has_dim2_check) {
                          detail = "row " + std::to_string(i + 1) +
                                   " was inconclusive: " + paper[i].dim2_note;
                          return false;
                      }
                      if (!paper[i].dim2_matches) {
                          detail = "row " + std::to_string(i + 1) + " disagrees";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(9, "homogenized graded Betti numbers match the plain ones (rows 1 and 2)",
              [&](std::string& detail) {
                  for (size_t i = 0; i < 2; ++i) {
                      const IntegerMatrix& A = matrices[i];
                      std::vector<Rational> beta(A.d, Rational(0));
                      WeylIdeal H = gkz_ideal(A, beta);
                      AdmissibleWeight w = bernstein_weight(A.n);
                      BettiTable plain =
                          betti_table(minimal_free_resolution(gr_initial_ideal(H, w)));
                      BettiTable homog = betti_table(
                          minimal_free_resolution(gr_initial_ideal(homogenize_ideal(H), w)));
                      if (plain.entries != homog.entries || plain.totals != homog.totals) {
                          std::ostringstream os;
                          os << "row " << (i + 1) << " differs:\n"
                             << staircase_text(plain) << "versus\n" << staircase_text(homog);
                          detail = os.str();
                          return false;
                      }
                  }
                  return true;
              });

    criterion(10, "the weight-(1,...,1) umbrella is consistent with in I_A on all example rows",
              [&](std::string& detail) {
                  if (paper.size() != matrices.size()) {
                      detail = "example classifications unavailable";
                      return false;
                  }
                  for (size_t i = 0; i < paper.size(); ++i)
                      if (!paper[i].umbrella_ok) {
                          detail = "row " + std::to_string(i + 1) + " inconsistent";
                          return false;
                      }
                  return true;
              });

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
