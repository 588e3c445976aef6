#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "doily/gf2.hpp"
#include "doily/pauli.hpp"

namespace doily {

struct PolarSpace {
    int n = 0;
    std::vector<GF2Vector> points;
    std::vector<std::vector<Subspace>> isotropic;  // isotropic[r-1] holds the rank-r subspaces

    const std::vector<Subspace>& subspaces(int rank) const { return isotropic.at(rank - 1); }
    const std::vector<Subspace>& lines() const { return subspaces(2); }
    const std::vector<Subspace>& generators() const { return subspaces(n); }
};

PolarSpace build_polar_space(int n);

std::vector<GF2Vector> quadric_points(int n);

// Abstract point-line incidence structure; lines hold point indices.
struct PointLineGeometry {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> lines;

    int num_points() const { return static_cast<int>(labels.size()); }
    bool collinear(int a, int b) const;
};

// GQ(2,2): 15 points, 15 lines, 3 points/line, 3 lines/point, one-point axiom.
bool is_gq22(const PointLineGeometry& g);

// point map a -> b preserving lines, or nullopt
std::optional<std::vector<int>> find_isomorphism(const PointLineGeometry& a, const PointLineGeometry& b);

// W(3,2) with two-qubit labels, lines in enumeration order
PointLineGeometry doily_geometry();

struct KleinPoint {
    std::uint8_t plucker = 0;  // bit j = coordinate j of (p01,p02,p03,p12,p13,p23)
    Subspace source_line;
};

int klein_form(std::uint8_t p);
int klein_polar_form(std::uint8_t a, std::uint8_t b);

KleinPoint plucker_line_map(const Subspace& line);

struct KleinRealDoily {
    std::vector<KleinPoint> points;          // images of the isotropic lines
    std::vector<std::vector<bool>> adjacent;  // source lines intersect
    PointLineGeometry geometry;              // light rays as lines
};

KleinRealDoily klein_real_doily();

struct Spread {
    std::array<Subspace, 5> lines;
};

std::vector<Spread> doily_spreads();

enum class PlaneColor { blue, red, green };
std::string to_string(PlaneColor c);

struct PluckerPair {
    PlaneColor color;
    int slot = 0;                         // recovery qubit, 0-based
    std::vector<PauliOperator> plane;     // seven three-qubit observables
    PauliOperator observable;             // four-qubit image on the quadric
};

std::vector<PluckerPair> plucker_pairs();

struct PluckerReport {
    bool symmetric = false;
    bool commute_with_yiii = false;
    bool grid = false;
    int negative_grid_lines = 0;
    int positive_grid_lines = 0;
    bool negative_lines_mixed_color = false;
    bool intersections = false;
    bool collinear_iff_intersecting = false;
    std::vector<std::string> problems;
    bool ok() const;
};

PluckerReport verify_plucker_plane_pairs(const std::vector<PluckerPair>& pairs);

}  // namespace doily
