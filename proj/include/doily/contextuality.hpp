#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "doily/pauli.hpp"
#include "doily/polar.hpp"

namespace doily {

struct Parity {
    std::vector<int> points;
    std::uint8_t rhs = 0;
};

struct IncidenceSystem {
    std::vector<std::string> points;
    std::vector<std::vector<int>> contexts;
    std::vector<std::uint8_t> rhs;  // 1 iff the context is negative
    // A context may need several parities to hold (a plane is satisfied only
    // if all seven of its lines are). Empty means one parity per context.
    std::vector<std::vector<Parity>> parities;

    int num_points() const { return static_cast<int>(points.size()); }
    int num_contexts() const { return static_cast<int>(contexts.size()); }
    bool single_parity() const { return parities.empty(); }
    void validate() const;
};

// contexts from a geometry, rhs from the signed labels
IncidenceSystem line_system(const PointLineGeometry& g, const std::vector<PauliOperator>& labels);

// 135 planes over the 63 nonzero three-qubit vectors; labels[i] is the signed
// observable of the point with bit value i+1.
IncidenceSystem plane_system_w52(const std::vector<PauliOperator>& labels);

// canonical unsigned three-qubit labels
std::vector<PauliOperator> canonical_w52_labels();

bool context_satisfied(const IncidenceSystem& sys, int c, const std::vector<std::uint8_t>& x);
std::vector<int> violated_contexts(const IncidenceSystem& sys, const std::vector<std::uint8_t>& x);

enum class DegreeMode { exact, bound };

struct BoundOptions {
    std::uint64_t seed = 1;
    int restarts = 64;
    int max_flips = 4000;
};

struct DegreeResult {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    std::vector<std::uint8_t> witness;
    std::vector<int> violated;
    std::string method;
};

DegreeResult contextuality_degree(const IncidenceSystem& sys, DegreeMode mode, const BoundOptions& opt = {});

// exhaustive over 2^points; witness is lexicographically smallest (x_0 first)
DegreeResult degree_exhaustive(const IncidenceSystem& sys);
// minimum weight of rhs + column space, by weight-ordered search over contexts
DegreeResult degree_coset_leader(const IncidenceSystem& sys);
DegreeResult degree_bound(const IncidenceSystem& sys, const BoundOptions& opt);

// true iff every parity can hold simultaneously
bool is_consistent(const IncidenceSystem& sys);

struct LiftResult {
    int satisfied = 0;
    std::vector<std::uint8_t> assignment;
};

LiftResult max_stabilizer_lift(const IncidenceSystem& sys);

DegreeResult plane_contextuality_w52(const IncidenceSystem& planes, const BoundOptions& opt = {});

}  // namespace doily
