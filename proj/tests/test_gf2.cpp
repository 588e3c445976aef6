#include <doctest.h>

#include <bit>
#include <random>
#include <set>

#include "doily/gf2.hpp"

using namespace doily;

namespace {

// literal sum over qubits, no masks
int form_by_coordinates(const GF2Vector& u, const GF2Vector& v) {
    int s = 0;
    for (int i = 0; i < u.num_qubits(); ++i) s += (u.q(i) && v.p(i)) + (u.p(i) && v.q(i));
    return s % 2;
}

// ordered bases of a k-space over GF(2)
long ordered_bases(int k) {
    long c = 1;
    for (int i = 0; i < k; ++i) c *= (1L << k) - (1L << i);
    return c;
}

// count rank-k subspaces by counting independent ordered k-tuples
long count_by_tuples(int n, int k, bool isotropic) {
    const int dim = 1 << (2 * n);
    long tuples = 0;
    std::vector<GF2Vector> cur;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == k) {
            ++tuples;
            return;
        }
        for (int b = 1; b < dim; ++b) {
            GF2Vector v(n, static_cast<std::uint16_t>(b));
            if (isotropic) {
                bool ok = true;
                for (const auto& u : cur) ok = ok && form_by_coordinates(u, v) == 0;
                if (!ok) continue;
            }
            cur.push_back(v);
            if (gf2_rank(cur) == static_cast<int>(cur.size())) self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return tuples / ordered_bases(k);
}

}  // namespace

TEST_CASE("symplectic form matches coordinate expansion on all pairs of V(6,2)") {
    for (int a = 0; a < 64; ++a)
        for (int b = 0; b < 64; ++b) {
            GF2Vector u(3, a), v(3, b);
            CHECK(symplectic_form(u, v) == form_by_coordinates(u, v));
        }
}

TEST_CASE("symplectic form is alternating, symmetric and bilinear") {
    std::mt19937 rng(5);
    for (int t = 0; t < 2000; ++t) {
        GF2Vector u(7, rng() & 0x3fff), v(7, rng() & 0x3fff), w(7, rng() & 0x3fff);
        CHECK(symplectic_form(u, u) == 0);
        CHECK(symplectic_form(u, v) == symplectic_form(v, u));
        CHECK(symplectic_form(u + v, w) == (symplectic_form(u, w) ^ symplectic_form(v, w)));
    }
}

TEST_CASE("symplectic form of XYZ against XYZ with q_0 flipped") {
    const GF2Vector xyz = GF2Vector::from_qp(3, 0b110, 0b011);
    CHECK(xyz.to_string() == "011110");
    const GF2Vector e0(3, 1);
    CHECK(symplectic_form(xyz, xyz + e0) == form_by_coordinates(xyz, xyz + e0));
    CHECK(symplectic_form(xyz, xyz + e0) == 1);
}

TEST_CASE("quadratic form counts Y factors mod 2 and polarizes to the symplectic form") {
    CHECK(quadratic_form(GF2Vector::from_qp(1, 1, 1)) == 1);
    for (int a = 0; a < 64; ++a) {
        GF2Vector u(3, a);
        int ys = 0;
        for (int i = 0; i < 3; ++i) ys += u.q(i) && u.p(i);
        CHECK(quadratic_form(u) == ys % 2);
        for (int b = 0; b < 64; ++b) {
            GF2Vector v(3, b);
            CHECK((quadratic_form(u + v) ^ quadratic_form(u) ^ quadratic_form(v)) == symplectic_form(u, v));
        }
    }
}

TEST_CASE("transvections preserve the symplectic form and are involutions") {
    for (int w = 1; w < 16; ++w)
        for (int a = 0; a < 16; ++a) {
            GF2Vector W(2, w), u(2, a);
            CHECK(transvection(W, transvection(W, u)) == u);
            for (int b = 0; b < 16; ++b) {
                GF2Vector v(2, b);
                CHECK(symplectic_form(transvection(W, u), transvection(W, v)) == symplectic_form(u, v));
            }
        }
}

TEST_CASE("span extracts an independent generator set") {
    std::vector<GF2Vector> g{GF2Vector(2, 1), GF2Vector(2, 2), GF2Vector(2, 3), GF2Vector(2, 0)};
    const Subspace s = span(2, g);
    CHECK(s.rank() == 2);
    CHECK(s.points().size() == 3);
    CHECK(span(2, std::vector<GF2Vector>{}).rank() == 0);
    CHECK(span(2, std::vector<GF2Vector>{}).points().empty());
}

TEST_CASE("span is canonical: different generators of one subspace compare equal") {
    std::vector<GF2Vector> a{GF2Vector(3, 5), GF2Vector(3, 9)};
    std::vector<GF2Vector> b{GF2Vector(3, 12), GF2Vector(3, 5)};
    CHECK(span(3, a) == span(3, b));
}

TEST_CASE("subspace counts agree with counting independent tuples") {
    const auto all22 = enumerate_subspaces(2, 2, SubspaceFilter::all);
    const auto iso22 = enumerate_subspaces(2, 2, SubspaceFilter::totally_isotropic);
    CHECK(all22.size() == 35);
    CHECK(iso22.size() == 15);
    CHECK(static_cast<long>(all22.size()) == count_by_tuples(2, 2, false));
    CHECK(static_cast<long>(iso22.size()) == count_by_tuples(2, 2, true));
    const auto iso33 = enumerate_subspaces(3, 3, SubspaceFilter::totally_isotropic);
    CHECK(iso33.size() == 135);
    CHECK(static_cast<long>(iso33.size()) == count_by_tuples(3, 3, true));
}

TEST_CASE("Lagrangian counts are products of (2^i + 1)") {
    for (int n = 1; n <= 3; ++n) {
        long expect = 1;
        for (int i = 1; i <= n; ++i) expect *= (1L << i) + 1;
        CHECK(static_cast<long>(enumerate_subspaces(n, n, SubspaceFilter::totally_isotropic).size()) == expect);
    }
}

TEST_CASE("enumeration is duplicate-free, sorted, and isotropy matches pairwise orthogonality") {
    const auto all = enumerate_subspaces(2, 2, SubspaceFilter::all);
    std::set<std::vector<GF2Vector>> seen;
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(seen.insert(all[i].points()).second);
        if (i) CHECK(all[i - 1] < all[i]);
        bool pairwise = true;
        for (const auto& a : all[i].points())
            for (const auto& b : all[i].points()) pairwise = pairwise && form_by_coordinates(a, b) == 0;
        CHECK(is_totally_isotropic(all[i]) == pairwise);
    }
}

TEST_CASE("mixing qubit counts is a dimension error") {
    CHECK_THROWS_AS(symplectic_form(GF2Vector(2, 1), GF2Vector(3, 1)), DimensionError);
}
