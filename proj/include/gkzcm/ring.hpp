// Commutative polynomial rings over Q: named variables plus an integer
// grading matrix (one column per variable). The default grading is the
// standard one (single row of ones). Rings are compared by content, so
// independently constructed equal rings interoperate.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gkzcm/errors.hpp"

namespace gkzcm {

using DegreeVector = std::vector<long long>;

struct PolyRing {
    std::vector<std::string> vars;
    // grading[r][j] = degree of variable j in grading row r; never empty.
    std::vector<DegreeVector> grading;

    size_t nvars() const { return vars.size(); }
    size_t grading_rank() const { return grading.size(); }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }

    DegreeVector degree_of_var(size_t j) const {
        DegreeVector d(grading.size());
        for (size_t r = 0; r < grading.size(); ++r) d[r] = grading[r][j];
        return d;
    }

    bool operator==(const PolyRing& o) const { return vars == o.vars && grading == o.grading; }
    bool operator!=(const PolyRing& o) const { return !(*this == o); }

    static PolyRing standard(std::vector<std::string> names) {
        PolyRing r;
        r.grading.assign(1, DegreeVector(names.size(), 1));
        r.vars = std::move(names);
        return r;
    }

    static PolyRing graded(std::vector<std::string> names, std::vector<DegreeVector> grading) {
        if (grading.empty()) throw validation_error("ring grading must have at least one row");
        for (const auto& row : grading)
            if (row.size() != names.size())
                throw dimension_error("grading row length differs from variable count");
        PolyRing r;
        r.vars = std::move(names);
        r.grading = std::move(grading);
        return r;
    }
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr ring_ptr(PolyRing r) { return std::make_shared<const PolyRing>(std::move(r)); }

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return;
    if (!a || !b || *a != *b) throw ring_mismatch_error("operands belong to different rings");
}

// Same variables, standard grading (used to move A-graded ideals into the
// standard-graded world for initial-ideal work).
inline RingPtr with_standard_grading(const RingPtr& r) {
    return ring_ptr(PolyRing::standard(r->vars));
}

inline RingPtr with_grading(const RingPtr& r, std::vector<DegreeVector> grading) {
    return ring_ptr(PolyRing::graded(r->vars, std::move(grading)));
}

}  // namespace gkzcm
