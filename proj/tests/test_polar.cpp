#include <doctest.h>

#include <map>
#include <set>

#include "doily/polar.hpp"

using namespace doily;

namespace {

long gauss_binomial(int n, int k) {
    long num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= (1L << (n - i)) - 1;
        den *= (1L << (i + 1)) - 1;
    }
    return num / den;
}

// totally isotropic k-spaces of a symplectic 2n-space over GF(2)
long isotropic_count(int n, int k) {
    long c = gauss_binomial(n, k);
    for (int i = n - k + 1; i <= n; ++i) c *= (1L << i) + 1;
    return c;
}

int hamming_common(const Subspace& a, const Subspace& b) {
    int c = 0;
    for (const auto& p : a.points()) c += b.contains(p);
    return c;
}

}  // namespace

TEST_CASE("polar space counts match the closed-form isotropic subspace counts") {
    for (int n = 2; n <= 4; ++n) {
        const PolarSpace w = build_polar_space(n);
        CHECK(static_cast<long>(w.points.size()) == (1L << (2 * n)) - 1);
        for (int k = 1; k <= n; ++k) CHECK(static_cast<long>(w.subspaces(k).size()) == isotropic_count(n, k));
    }
    const PolarSpace w4 = build_polar_space(4);
    CHECK(w4.lines().size() == 5355);
    CHECK(w4.subspaces(3).size() == 11475);
    CHECK(w4.generators().size() == 2295);
}

TEST_CASE("quadric point counts: 35 and 135") {
    CHECK(quadric_points(3).size() == 35);
    CHECK(quadric_points(4).size() == 135);
    for (int n = 2; n <= 4; ++n) {
        const long expect = (1L << (2 * n - 1)) + (1L << (n - 1)) - 1;
        CHECK(static_cast<long>(quadric_points(n).size()) == expect);
        for (const auto& v : quadric_points(n)) CHECK(quadratic_form(v) == 0);
    }
}

TEST_CASE("doily is GQ(2,2): three lines per point, no triangles") {
    const PointLineGeometry g = doily_geometry();
    CHECK(is_gq22(g));
    std::vector<int> deg(g.num_points());
    for (const auto& l : g.lines)
        for (int p : l) ++deg[p];
    for (int d : deg) CHECK(d == 3);
    for (int a = 0; a < 15; ++a)
        for (int b = a + 1; b < 15; ++b)
            for (int c = b + 1; c < 15; ++c) {
                if (!(g.collinear(a, b) && g.collinear(b, c) && g.collinear(a, c))) continue;
                bool on_line = false;
                for (const auto& l : g.lines) {
                    std::set<int> s(l.begin(), l.end());
                    on_line = on_line || (s.count(a) && s.count(b) && s.count(c));
                }
                CHECK(on_line);
            }
}

TEST_CASE("a geometry with one line removed is not GQ(2,2)") {
    PointLineGeometry g = doily_geometry();
    g.lines.pop_back();
    CHECK_FALSE(is_gq22(g));
}

TEST_CASE("Plucker map sends the 35 lines of PG(3,2) injectively onto the Klein quadric") {
    std::set<std::uint8_t> images;
    for (const auto& l : enumerate_subspaces(2, 2, SubspaceFilter::all)) {
        const KleinPoint k = plucker_line_map(l);
        CHECK(k.plucker != 0);
        CHECK(klein_form(k.plucker) == 0);
        images.insert(k.plucker);
    }
    CHECK(images.size() == 35);
    int on_quadric = 0;
    for (int p = 1; p < 64; ++p) on_quadric += klein_form(static_cast<std::uint8_t>(p)) == 0;
    CHECK(on_quadric == 35);
}

TEST_CASE("two lines of PG(3,2) meet iff their Klein images are orthogonal") {
    const auto lines = enumerate_subspaces(2, 2, SubspaceFilter::all);
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const bool meet = hamming_common(lines[i], lines[j]) > 0;
            CHECK(meet == (klein_polar_form(plucker_line_map(lines[i]).plucker, plucker_line_map(lines[j]).plucker) == 0));
        }
}

TEST_CASE("real Klein doily is isomorphic to W(3,2) and adjacency means intersection") {
    const KleinRealDoily k = klein_real_doily();
    CHECK(k.points.size() == 15);
    CHECK(is_gq22(k.geometry));
    const auto iso = find_isomorphism(k.geometry, doily_geometry());
    REQUIRE(iso.has_value());
    const PointLineGeometry d = doily_geometry();
    std::set<std::set<int>> target;
    for (const auto& l : d.lines) target.insert({l.begin(), l.end()});
    for (const auto& l : k.geometry.lines) {
        std::set<int> img;
        for (int p : l) img.insert((*iso)[p]);
        CHECK(target.count(img));
    }
    int pairs = 0;
    for (int i = 0; i < 15; ++i)
        for (int j = i + 1; j < 15; ++j) {
            ++pairs;
            const bool meet = hamming_common(k.points[i].source_line, k.points[j].source_line) > 0;
            CHECK(k.adjacent[i][j] == meet);
            CHECK(meet == (klein_polar_form(k.points[i].plucker, k.points[j].plucker) == 0));
        }
    CHECK(pairs == 105);
}

TEST_CASE("doily has 6 spreads and every line lies in exactly 2") {
    const auto spreads = doily_spreads();
    CHECK(spreads.size() == 6);
    std::map<std::vector<GF2Vector>, int> uses;
    for (const auto& s : spreads) {
        std::set<GF2Vector> covered;
        for (const auto& l : s.lines) {
            ++uses[l.points()];
            for (const auto& p : l.points()) CHECK(covered.insert(p).second);
        }
        CHECK(covered.size() == 15);
    }
    CHECK(uses.size() == 15);
    for (const auto& [l, c] : uses) CHECK(c == 2);
}

TEST_CASE("Plucker plane pairs: symmetric, commute with YIII, grid with 3 negative lines") {
    const auto pairs = plucker_pairs();
    CHECK(pairs.size() == 9);
    const PluckerReport r = verify_plucker_plane_pairs(pairs);
    CHECK(r.ok());
    CHECK(r.symmetric);
    CHECK(r.commute_with_yiii);
    CHECK(r.grid);
    CHECK(r.negative_grid_lines == 3);
    CHECK(r.positive_grid_lines == 3);
    const auto yiii = PauliOperator::parse("YIII");
    for (const auto& p : pairs) {
        CHECK(quadratic_form(p.observable.vec()) == 0);
        CHECK(commutes(p.observable, yiii));
    }
}

TEST_CASE("Plucker report flags a tampered observable") {
    auto pairs = plucker_pairs();
    pairs[0].observable = PauliOperator::parse("XIII");
    CHECK_FALSE(verify_plucker_plane_pairs(pairs).ok());
}
