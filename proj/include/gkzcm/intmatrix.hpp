// Integer matrices A = (a_1 .. a_n) with the validity contract used across
// the pipeline: rank d, nonzero columns, pointed semigroup NA, and
// ZA = Z^d. Pointedness is certified by an explicit rational functional
// eta with eta . a_j >= 1 for every column, found by exact vertex
// enumeration; the same eta later bounds semigroup searches.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "gkzcm/errors.hpp"
#include "gkzcm/linalg.hpp"
#include "gkzcm/numeric.hpp"

namespace gkzcm {

struct IntegerMatrix {
    size_t d = 0, n = 0;
    std::vector<std::vector<long long>> rows;  // d rows of n entries

    std::vector<long long> column(size_t j) const {
        std::vector<long long> c(d);
        for (size_t i = 0; i < d; ++i) c[i] = rows[i][j];
        return c;
    }

    bool operator==(const IntegerMatrix& o) const { return rows == o.rows; }
    bool operator!=(const IntegerMatrix& o) const { return !(*this == o); }
};

inline IntegerMatrix make_matrix(std::vector<std::vector<long long>> rows) {
    if (rows.empty() || rows[0].empty()) throw validation_error("matrix is empty");
    for (const auto& r : rows)
        if (r.size() != rows[0].size())
            throw validation_error("ragged rows: all rows must have the same length");
    IntegerMatrix A;
    A.d = rows.size();
    A.n = rows[0].size();
    A.rows = std::move(rows);
    return A;
}

// Rows separated by ';', entries by whitespace: "0 1 2 2; 2 1 1 0".
inline IntegerMatrix parse_matrix_shape(const std::string& text) {
    std::vector<std::vector<long long>> rows;
    std::string rowtext;
    std::stringstream ss(text);
    while (std::getline(ss, rowtext, ';')) {
        std::vector<long long> row;
        std::istringstream rs(rowtext);
        std::string tok;
        while (rs >> tok) {
            size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                throw validation_error("non-integer entry '" + tok + "' in matrix text");
            }
            if (used != tok.size())
                throw validation_error("non-integer entry '" + tok + "' in matrix text");
            row.push_back(v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return make_matrix(std::move(rows));
}

inline std::string to_string(const IntegerMatrix& A) {
    std::ostringstream os;
    for (size_t i = 0; i < A.d; ++i) {
        if (i) os << "; ";
        for (size_t j = 0; j < A.n; ++j) {
            if (j) os << ' ';
            os << A.rows[i][j];
        }
    }
    return os.str();
}

namespace detail {

inline Integer integer_det(const std::vector<std::vector<Integer>>& m) {
    const size_t k = m.size();
    if (k == 1) return m[0][0];
    Integer det = 0;
    for (size_t j = 0; j < k; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Integer>> sub(k - 1, std::vector<Integer>(k - 1));
        for (size_t r = 1; r < k; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < k; ++c)
                if (c != j) sub[r - 1][cc++] = m[r][c];
        }
        Integer cof = m[0][j] * integer_det(sub);
        det += (j % 2 == 0) ? cof : -cof;
    }
    return det;
}

// Enumerate d-subsets; on each, the pivoted-subset solution of
// eta . a_j = 1 is checked for global feasibility. A pointed cone of full
// rank gives a line-free feasible region, so some vertex (hence some
// subset) certifies feasibility; no subset feasible means not pointed.
inline std::vector<Rational> find_positive_functional(const IntegerMatrix& A) {
    std::vector<size_t> idx(A.d);
    auto feasible = [&](const QRow& eta) {
        for (size_t j = 0; j < A.n; ++j) {
            Rational s = 0;
            for (size_t i = 0; i < A.d; ++i) s += eta[i] * rational_of(A.rows[i][j]);
            if (s < 1) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, size_t pos, size_t next) -> std::vector<Rational> {
        if (pos == A.d) {
            QMatrix m(A.d, QRow(A.d));
            for (size_t r = 0; r < A.d; ++r)
                for (size_t i = 0; i < A.d; ++i) m[r][i] = rational_of(A.rows[i][idx[r]]);
            auto sol = solve_linear(std::move(m), QRow(A.d, Rational(1)));
            if (sol && feasible(*sol)) return *sol;
            return {};
        }
        for (size_t j = next; j + (A.d - pos) <= A.n; ++j) {
            idx[pos] = j;
            auto r = self(self, pos + 1, j + 1);
            if (!r.empty()) return r;
        }
        return {};
    };
    return rec(rec, 0, 0);
}

inline Integer minor_gcd(const IntegerMatrix& A) {
    std::vector<size_t> idx(A.d);
    Integer g = 0;
    auto rec = [&](auto&& self, size_t pos, size_t next) -> void {
        if (pos == A.d) {
            std::vector<std::vector<Integer>> m(A.d, std::vector<Integer>(A.d));
            for (size_t r = 0; r < A.d; ++r)
                for (size_t c = 0; c < A.d; ++c) m[r][c] = Integer((long)A.rows[r][idx[c]]);
            Integer det = integer_det(m);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
            return;
        }
        for (size_t j = next; j + (A.d - pos) <= A.n; ++j) {
            idx[pos] = j;
            self(self, pos + 1, j + 1);
        }
    };
    rec(rec, 0, 0);
    return g;
}

}  // namespace detail

struct MatrixCheck {
    std::vector<std::string> violations;
    std::vector<Rational> eta;  // eta . a_j >= 1 for all j, set when pointed

    bool ok() const { return violations.empty(); }
};

inline MatrixCheck check_matrix(const IntegerMatrix& A) {
    MatrixCheck out;
    if (A.d == 0 || A.n == 0) {
        out.violations.push_back("matrix is empty");
        return out;
    }
    if (A.n > 12 || A.d > 4) {
        out.violations.push_back("matrix exceeds the supported size (n <= 12, d <= 4)");
        return out;
    }
    for (size_t j = 0; j < A.n; ++j) {
        bool zero = true;
        for (size_t i = 0; i < A.d; ++i) zero = zero && A.rows[i][j] == 0;
        if (zero) out.violations.push_back("column " + std::to_string(j + 1) + " is zero");
    }

    QMatrix m(A.d, QRow(A.n));
    for (size_t i = 0; i < A.d; ++i)
        for (size_t j = 0; j < A.n; ++j) m[i][j] = rational_of(A.rows[i][j]);
    size_t rank = matrix_rank(std::move(m));
    if (rank != A.d) {
        out.violations.push_back("rank is " + std::to_string(rank) + ", expected " +
                                 std::to_string(A.d));
        return out;  // the remaining checks assume full rank
    }

    out.eta = detail::find_positive_functional(A);
    if (out.eta.empty())
        out.violations.push_back(
            "semigroup is not pointed (a nonzero nonnegative combination of columns is zero)");

    if (detail::minor_gcd(A) != 1)
        out.violations.push_back("columns do not generate the full lattice Z^d");
    return out;
}

inline void validate_matrix(const IntegerMatrix& A) {
    MatrixCheck c = check_matrix(A);
    if (c.ok()) return;
    std::string msg = "invalid matrix:";
    for (const auto& v : c.violations) msg += " " + v + ";";
    msg.pop_back();
    throw validation_error(msg);
}

// parse_matrix_shape plus the full validity contract.
inline IntegerMatrix parse_matrix(const std::string& text) {
    IntegerMatrix A = parse_matrix_shape(text);
    validate_matrix(A);
    return A;
}

inline std::vector<Rational> positive_functional(const IntegerMatrix& A) {
    std::vector<Rational> eta = detail::find_positive_functional(A);
    if (eta.empty()) throw validation_error("semigroup is not pointed");
    return eta;
}

// Z-basis of {u in Z^n : A u = 0} by column gcd reduction (Hermite form with
// a tracked unimodular transform).
inline std::vector<std::vector<long long>> lattice_kernel(const IntegerMatrix& A) {
    const size_t d = A.d, n = A.n;
    std::vector<std::vector<Integer>> w(n, std::vector<Integer>(d));   // columns
    std::vector<std::vector<Integer>> u(n, std::vector<Integer>(n));   // transform columns
    for (size_t c = 0; c < n; ++c) {
        for (size_t i = 0; i < d; ++i) w[c][i] = Integer((long)A.rows[i][c]);
        u[c][c] = 1;
    }

    size_t r = 0;
    for (size_t i = 0; i < d && r < n; ++i) {
        while (true) {
            size_t piv = n;
            for (size_t c = r; c < n; ++c)
                if (w[c][i] != 0 && (piv == n || cmp(abs(w[c][i]), abs(w[piv][i])) < 0)) piv = c;
            if (piv == n) break;
            std::swap(w[piv], w[r]);
            std::swap(u[piv], u[r]);
            bool cleared = true;
            for (size_t c = r + 1; c < n; ++c) {
                if (w[c][i] == 0) continue;
                Integer q = w[c][i] / w[r][i];  // truncated: remainder shrinks
                if (q != 0) {
                    for (size_t k = 0; k < d; ++k) w[c][k] -= q * w[r][k];
                    for (size_t k = 0; k < n; ++k) u[c][k] -= q * u[r][k];
                }
                if (w[c][i] != 0) cleared = false;
            }
            if (cleared) {
                ++r;
                break;
            }
        }
    }

    std::vector<std::vector<long long>> kernel;
    for (size_t c = r; c < n; ++c) {
        std::vector<long long> v(n);
        for (size_t k = 0; k < n; ++k) {
            if (!u[c][k].fits_slong_p())
                throw internal_error("kernel basis entry exceeds the machine integer range");
            v[k] = u[c][k].get_si();
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace gkzcm
