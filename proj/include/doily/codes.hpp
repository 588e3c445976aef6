#pragma once

#include <array>
#include <string>
#include <vector>

#include "doily/pauli.hpp"
#include "doily/polar.hpp"

namespace doily {

enum class CodeKind { pentagon, heptagon };

struct StabilizerCode {
    CodeKind kind;
    std::string name;
    int n_qubits = 0;
    std::vector<PauliOperator> generators;
    // elements[mask] = product of generators g_{j+1} for set bits j, in increasing order
    std::vector<PauliOperator> elements;

    int threshold() const { return kind == CodeKind::pentagon ? 3 : 4; }
    // "1" .. "123456", generator indices are 1-based
    static std::string product_label(unsigned mask);
};

StabilizerCode make_code(CodeKind kind, std::string name, std::vector<PauliOperator> generators);
const StabilizerCode& pentagon_code();
const StabilizerCode& heptagon_code();
const StabilizerCode& code(CodeKind kind);

// Printed listing entries keyed by product label.
struct ListingEntry {
    std::string label;
    std::string printed;
};

std::vector<ListingEntry> pentagon_listing();
std::vector<ListingEntry> heptagon_listing();

struct ListingMismatch {
    std::string label;
    std::string printed;
    std::string computed;
};

std::vector<ListingMismatch> compare_listing(const StabilizerCode& c, const std::vector<ListingEntry>& listing);

// Product of mutually commuting operators must be +-identity; returns the sign.
int context_sign(std::span<const PauliOperator> points);

struct SplitLabeling {
    const StabilizerCode* code = nullptr;
    std::vector<int> left_positions;
    std::vector<int> right_positions;
    // indexed by element mask; left labels unsigned, right labels carry the element's sign
    std::vector<PauliOperator> left_labels;
    std::vector<PauliOperator> right_labels;
    bool left_bijective = false;
};

SplitLabeling split(const StabilizerCode& c, std::vector<int> left);

struct SplitLine {
    std::array<unsigned, 3> elements;  // element masks
    int left_sign = 1;
    int right_sign = 1;
    int full_sign = 1;
};

struct SplitDoily {
    SplitLabeling labeling;
    std::vector<unsigned> points;  // element masks in point order
    std::vector<SplitLine> lines;

    PointLineGeometry left_geometry() const;
    PointLineGeometry right_geometry() const;
};

SplitDoily build_split_doily(const SplitLabeling& labeling);

// Printed negative lines of the two-qubit and three-qubit split doily.
std::vector<std::vector<std::string>> printed_negative_lines_left();
std::vector<std::vector<std::string>> printed_negative_lines_right();

enum class PlaneClass { positive, negative };

struct PlaneClassification {
    PlaneClass cls = PlaneClass::positive;
    int product_sign = 1;
    std::vector<std::array<int, 3>> lines;           // the seven lines, point indices
    std::vector<int> line_signs;
    std::vector<std::array<int, 3>> negative_lines;
};

PlaneClassification classify_plane(std::span<const PauliOperator> points);

struct NegativePlane {
    PlaneColor color;
    int slot = 0;                        // recovery qubit, 0-based
    std::vector<unsigned> elements;      // element masks, 7
    std::vector<PauliOperator> left;     // three-qubit labels
    std::vector<PauliOperator> right;    // signed four-qubit labels
    PlaneClassification classification;
};

struct NegativePlaneInventory {
    std::vector<NegativePlane> planes;
    // per slot: the common line of the triple in both labelings
    std::vector<std::vector<PauliOperator>> common_left;
    std::vector<std::vector<PauliOperator>> common_right;
    bool triples_meet_in_lines = false;
    bool colors_meet_in_points = false;
};

NegativePlaneInventory negative_planes_heptacode();

struct PrintedPlane {
    PlaneColor color;
    int slot;
    std::vector<std::string> left;
    std::vector<std::string> right;
};

std::vector<PrintedPlane> printed_negative_planes();

std::array<int, 4> type23_statistics(const SplitLabeling& labeling);

SplitDoily embedded_central_doily();

}  // namespace doily
