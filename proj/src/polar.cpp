#include "doily/polar.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

namespace doily {

PolarSpace build_polar_space(int n) {
    if (n < 2 || n > 4) throw DomainError("build_polar_space: n must be in [2,4]");
    PolarSpace w;
    w.n = n;
    for (std::uint32_t b = 1; b < (1U << (2 * n)); ++b) w.points.emplace_back(n, static_cast<std::uint16_t>(b));
    for (int r = 1; r <= n; ++r) w.isotropic.push_back(enumerate_subspaces(n, r, SubspaceFilter::totally_isotropic));
    return w;
}

std::vector<GF2Vector> quadric_points(int n) {
    if (n < 1 || n > 4) throw DomainError("quadric_points: n must be in [1,4]");
    std::vector<GF2Vector> out;
    for (std::uint32_t b = 1; b < (1U << (2 * n)); ++b) {
        GF2Vector v(n, static_cast<std::uint16_t>(b));
        if (quadratic_form(v) == 0) out.push_back(v);
    }
    return out;
}

bool PointLineGeometry::collinear(int a, int b) const {
    for (const auto& l : lines)
        if (std::find(l.begin(), l.end(), a) != l.end() && std::find(l.begin(), l.end(), b) != l.end()) return true;
    return false;
}

bool is_gq22(const PointLineGeometry& g) {
    if (g.num_points() != 15 || g.lines.size() != 15) return false;
    std::vector<int> deg(15, 0);
    for (const auto& l : g.lines) {
        if (l.size() != 3) return false;
        for (int p : l) {
            if (p < 0 || p >= 15) return false;
            ++deg[p];
        }
    }
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 3; })) return false;
    for (const auto& l : g.lines)
        for (int p = 0; p < 15; ++p) {
            if (std::find(l.begin(), l.end(), p) != l.end()) continue;
            int c = 0;
            for (int x : l) c += g.collinear(p, x);
            if (c != 1) return false;
        }
    return true;
}

std::optional<std::vector<int>> find_isomorphism(const PointLineGeometry& a, const PointLineGeometry& b) {
    const int n = a.num_points();
    if (n != b.num_points() || a.lines.size() != b.lines.size()) return std::nullopt;
    auto matrix = [n](const PointLineGeometry& g) {
        std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
        for (const auto& l : g.lines)
            for (int x : l)
                for (int y : l)
                    if (x != y) m[x][y] = true;
        return m;
    };
    const auto ca = matrix(a), cb = matrix(b);
    std::set<std::vector<int>> lines_b;
    for (auto l : b.lines) {
        std::sort(l.begin(), l.end());
        lines_b.insert(l);
    }
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> extend = [&](int i) -> bool {
        if (i == n) {
            for (const auto& l : a.lines) {
                std::vector<int> img;
                for (int x : l) img.push_back(map[x]);
                std::sort(img.begin(), img.end());
                if (!lines_b.count(img)) return false;
            }
            return true;
        }
        for (int t = 0; t < n; ++t) {
            if (used[t]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = ca[i][j] == cb[t][map[j]];
            if (!ok) continue;
            map[i] = t;
            used[t] = true;
            if (extend(i + 1)) return true;
            used[t] = false;
        }
        map[i] = -1;
        return false;
    };
    if (extend(0)) return map;
    return std::nullopt;
}

PointLineGeometry doily_geometry() {
    PolarSpace w = build_polar_space(2);
    PointLineGeometry g;
    std::map<std::uint16_t, int> index;
    for (const auto& p : w.points) {
        index[p.bits()] = g.num_points();
        g.labels.push_back(PauliOperator(p).symbols());
    }
    for (const auto& l : w.lines()) {
        std::vector<int> pts;
        for (const auto& p : l.points()) pts.push_back(index.at(p.bits()));
        g.lines.push_back(pts);
    }
    return g;
}

int klein_form(std::uint8_t p) {
    auto b = [p](int j) { return (p >> j) & 1; };
    return (b(0) & b(5)) ^ (b(1) & b(4)) ^ (b(2) & b(3));
}

int klein_polar_form(std::uint8_t a, std::uint8_t b) {
    return klein_form(a ^ b) ^ klein_form(a) ^ klein_form(b);
}

KleinPoint plucker_line_map(const Subspace& line) {
    if (line.rank() != 2 || line.num_qubits() != 2) throw DomainError("plucker_line_map: need a line of PG(3,2)");
    const auto u = line.generators()[0].bits(), v = line.generators()[1].bits();
    static constexpr int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::uint8_t p = 0;
    for (int j = 0; j < 6; ++j) {
        int m = pairs[j][0], nu = pairs[j][1];
        int c = (((u >> m) & (v >> nu)) ^ ((u >> nu) & (v >> m))) & 1;
        p |= static_cast<std::uint8_t>(c << j);
    }
    return KleinPoint{p, line};
}

KleinRealDoily klein_real_doily() {
    KleinRealDoily k;
    for (const auto& l : enumerate_subspaces(2, 2, SubspaceFilter::totally_isotropic)) k.points.push_back(plucker_line_map(l));
    const int n = static_cast<int>(k.points.size());
    k.adjacent.assign(n, std::vector<bool>(n, false));
    std::map<std::uint8_t, int> index;
    for (int i = 0; i < n; ++i) {
        index[k.points[i].plucker] = i;
        std::string s;
        for (int j = 0; j < 6; ++j) s += ((k.points[i].plucker >> j) & 1) ? '1' : '0';
        k.geometry.labels.push_back(s);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto& o = k.points[j].source_line.points();
            bool meet = std::any_of(o.begin(), o.end(), [&](const GF2Vector& v) { return k.points[i].source_line.contains(v); });
            k.adjacent[i][j] = meet;
        }
    // light rays: quadric lines {a, b, a+b} lying inside the real part
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto a = k.points[i].plucker, b = k.points[j].plucker;
            if (klein_polar_form(a, b)) continue;
            auto it = index.find(static_cast<std::uint8_t>(a ^ b));
            if (it == index.end() || it->second < j) continue;
            k.geometry.lines.push_back({i, j, it->second});
        }
    return k;
}

std::vector<Spread> doily_spreads() {
    const auto lines = enumerate_subspaces(2, 2, SubspaceFilter::totally_isotropic);
    std::vector<std::uint16_t> masks;
    for (const auto& l : lines) {
        std::uint16_t m = 0;
        for (const auto& p : l.points()) m |= static_cast<std::uint16_t>(1U << (p.bits() - 1));
        masks.push_back(m);
    }
    std::vector<Spread> out;
    std::vector<int> chosen;
    std::function<void(int, std::uint16_t)> rec = [&](int start, std::uint16_t covered) {
        if (chosen.size() == 5) {
            if (covered == 0x7FFF) {
                Spread s;
                for (int t = 0; t < 5; ++t) s.lines[t] = lines[chosen[t]];
                out.push_back(s);
            }
            return;
        }
        for (int i = start; i < static_cast<int>(lines.size()); ++i) {
            if (masks[i] & covered) continue;
            chosen.push_back(i);
            rec(i + 1, covered | masks[i]);
            chosen.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

std::string to_string(PlaneColor c) {
    switch (c) {
    case PlaneColor::blue: return "blue";
    case PlaneColor::red: return "red";
    case PlaneColor::green: return "green";
    }
    return "?";
}

std::vector<PluckerPair> plucker_pairs() {
    using C = PlaneColor;
    auto mk = [](C c, int slot, std::initializer_list<std::string_view> plane, std::string_view obs) {
        return PluckerPair{c, slot, parse_list(plane), PauliOperator::parse(obs)};
    };
    return {
        mk(C::blue, 2, {"YYY", "YYI", "ZZI", "XXI", "ZZY", "IIY", "XXY"}, "IYYI"),
        mk(C::red, 2, {"ZZZ", "YYI", "ZZI", "XXI", "YYZ", "XXZ", "IIZ"}, "IXXI"),
        mk(C::green, 2, {"XXX", "YYI", "ZZI", "XXI", "IIX", "ZZX", "YYX"}, "IZZI"),
        mk(C::blue, 4, {"YYY", "YIY", "ZIZ", "XIX", "ZYZ", "IYI", "XYX"}, "IYIY"),
        mk(C::red, 4, {"ZZZ", "YIY", "ZIZ", "XIX", "YZY", "XZX", "IZI"}, "IXIX"),
        mk(C::green, 4, {"XXX", "YIY", "ZIZ", "XIX", "IXI", "ZXZ", "YXY"}, "IZIZ"),
        mk(C::blue, 5, {"YYY", "IYY", "IZZ", "IXX", "YZZ", "YII", "YXX"}, "IIYY"),
        mk(C::red, 5, {"ZZZ", "IYY", "IZZ", "IXX", "ZYY", "ZXX", "ZII"}, "IIXX"),
        mk(C::green, 5, {"XXX", "IYY", "IZZ", "IXX", "XII", "XZZ", "XYY"}, "IIZZ"),
    };
}

bool PluckerReport::ok() const {
    return symmetric && commute_with_yiii && grid && negative_grid_lines == 3 && positive_grid_lines == 3 &&
           negative_lines_mixed_color && intersections && collinear_iff_intersecting && problems.empty();
}

PluckerReport verify_plucker_plane_pairs(const std::vector<PluckerPair>& pairs) {
    if (pairs.size() != 9) throw std::invalid_argument("verify_plucker_plane_pairs: expected 9 pairs");
    for (const auto& p : pairs) {
        if (p.plane.size() != 7 || p.observable.num_qubits() != 4)
            throw std::invalid_argument("verify_plucker_plane_pairs: malformed pair");
        std::vector<GF2Vector> vs;
        for (const auto& o : p.plane) {
            if (o.num_qubits() != 3) throw std::invalid_argument("verify_plucker_plane_pairs: plane label not 3-qubit");
            vs.push_back(o.vec());
        }
        Subspace s = span(vs);
        if (s.rank() != 3 || !is_totally_isotropic(s))
            throw std::invalid_argument("verify_plucker_plane_pairs: not an isotropic plane");
    }
    PluckerReport r;
    const auto yiii = PauliOperator::parse("YIII");
    r.symmetric = std::all_of(pairs.begin(), pairs.end(), [](const auto& p) { return quadratic_form(p.observable.vec()) == 0; });
    r.commute_with_yiii = std::all_of(pairs.begin(), pairs.end(), [&](const auto& p) { return commutes(p.observable, yiii); });

    const int n = 9;
    std::vector<std::array<int, 3>> grid_lines;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                const auto& x = pairs[a].observable;
                const auto& y = pairs[b].observable;
                const auto& z = pairs[c].observable;
                if (!commutes(x, y) || !commutes(x, z) || !commutes(y, z)) continue;
                if (!(x.vec() + y.vec() + z.vec()).is_zero()) continue;
                grid_lines.push_back({a, b, c});
                PauliOperator pr = x.unsigned_part() * y.unsigned_part() * z.unsigned_part();
                bool mixed = pairs[a].color != pairs[b].color && pairs[b].color != pairs[c].color &&
                             pairs[a].color != pairs[c].color;
                bool same = pairs[a].color == pairs[b].color && pairs[b].color == pairs[c].color;
                if (pr.sign() < 0) {
                    ++r.negative_grid_lines;
                    if (!mixed) r.problems.push_back("negative grid line with repeated color");
                } else {
                    ++r.positive_grid_lines;
                    if (!same) r.problems.push_back("positive grid line with mixed colors");
                }
            }
    std::vector<int> deg(n, 0);
    for (const auto& l : grid_lines)
        for (int x : l) ++deg[x];
    r.grid = grid_lines.size() == 6 && std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
    r.negative_lines_mixed_color = r.problems.empty();

    auto meet = [&](int a, int b) {
        int c = 0;
        for (const auto& x : pairs[a].plane)
            for (const auto& y : pairs[b].plane) c += x.vec() == y.vec();
        return c;
    };
    r.intersections = true;
    r.collinear_iff_intersecting = true;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int m = meet(a, b);
            if (pairs[a].color == pairs[b].color && m != 1) r.intersections = false;
            if (pairs[a].color != pairs[b].color && pairs[a].slot == pairs[b].slot && m != 3) r.intersections = false;
            bool collinear = commutes(pairs[a].observable, pairs[b].observable);
            if (collinear != (m > 0)) r.collinear_iff_intersecting = false;
        }
    return r;
}

}  // namespace doily
