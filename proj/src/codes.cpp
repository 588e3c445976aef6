#include "doily/codes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace doily {

std::string StabilizerCode::product_label(unsigned mask) {
    std::string s;
    for (int j = 0; j < 8; ++j)
        if ((mask >> j) & 1U) s += static_cast<char>('1' + j);
    return s;
}

StabilizerCode make_code(CodeKind kind, std::string name, std::vector<PauliOperator> generators) {
    if (generators.empty()) throw std::invalid_argument("make_code: no generators");
    const int n = generators.front().num_qubits();
    std::vector<GF2Vector> vs;
    for (const auto& g : generators) {
        if (g.num_qubits() != n) throw DimensionError("make_code: mixed qubit counts");
        if (!g.is_hermitian()) throw std::invalid_argument("make_code: non-Hermitian generator");
        vs.push_back(g.vec());
    }
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (!commutes(generators[i], generators[j])) throw std::invalid_argument("make_code: generators do not commute");
    if (gf2_rank(vs) != static_cast<int>(generators.size())) throw std::invalid_argument("make_code: dependent generators");

    StabilizerCode c{kind, std::move(name), n, std::move(generators), {}};
    const unsigned count = 1U << c.generators.size();
    c.elements.reserve(count);
    for (unsigned m = 0; m < count; ++m) {
        PauliOperator e = PauliOperator::identity(n);
        for (std::size_t j = 0; j < c.generators.size(); ++j)
            if ((m >> j) & 1U) e = e * c.generators[j];
        if (e.vec().is_zero() && e.phase() != 0) throw std::logic_error("make_code: -I in group");
        c.elements.push_back(e);
    }
    return c;
}

const StabilizerCode& pentagon_code() {
    static const StabilizerCode c =
        make_code(CodeKind::pentagon, "pentagon", parse_list({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}));
    return c;
}

const StabilizerCode& heptagon_code() {
    static const StabilizerCode c = make_code(
        CodeKind::heptagon, "heptagon",
        parse_list({"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"}));
    return c;
}

const StabilizerCode& code(CodeKind kind) {
    return kind == CodeKind::pentagon ? pentagon_code() : heptagon_code();
}

std::vector<ListingEntry> pentagon_listing() {
    return {
        {"1", "XZZXI"},   {"2", "IXZZX"},   {"3", "XIXZZ"},   {"4", "ZXIXZ"},
        {"12", "XYIYX"},  {"13", "IZYYZ"},  {"14", "YYZIZ"},  {"23", "XXYIY"},
        {"24", "ZIZYY"},  {"34", "YXXYI"},  {"234", "YIYXX"}, {"134", "ZYYZI"},
        {"124", "YZIZY"}, {"123", "IYXXY"}, {"1234", "ZZXIX"},
    };
}

std::vector<ListingEntry> heptagon_listing() {
    return {
        {"1", "IIIXXXX"},       {"2", "IXXIIXX"},       {"3", "XIXIXIX"},       {"4", "IIIZZZZ"},
        {"5", "IZZIIZZ"},       {"6", "ZIZIZIZ"},       {"12", "IXXXXII"},      {"13", "XIXXIXI"},
        {"14", "IIIYYYY"},      {"15", "-IZZXXYY"},     {"16", "-ZIZXYXY"},     {"23", "XXIIXXI"},
        {"24", "-IXXZZYY"},     {"25", "IYYIIYY"},      {"26", "-ZXYIZXY"},     {"34", "-XIXZYZY"},
        {"35", "-XZYIXZY"},     {"36", "YIYIYIY"},      {"45", "IZZZZII"},      {"46", "ZIZZIZI"},
        {"56", "ZZIIZZI"},      {"123", "XXIXIIX"},     {"124", "-IXXYYZZ"},    {"125", "-IYYZZXX"},
        {"126", "-ZXYXYIZ"},    {"134", "-XIXYZYZ"},    {"135", "-XZYXIYZ"},    {"136", "-YIYXZXZ"},
        {"145", "-IZZYYXX"},    {"146", "-ZIZYXYX"},    {"156", "-ZZIXYYX"},    {"234", "-XXIZYYZ"},
        {"235", "-XYZIXYZ"},    {"236", "-YXZIYXZ"},    {"245", "-IYYZZXX"},    {"246", "-ZXYZIYX"},
        {"256", "-ZYXIZYX"},    {"345", "-XZYZYIX"},    {"346", "-YIYZXZX"},    {"356", "-YZXIYZX"},
        {"456", "ZZIZIIZ"},     {"1234", "-XXIYZZY"},   {"1235", "-XYZXIZY"},   {"1236", "-YXZXZIY"},
        {"1245", "IYYYYII"},    {"1246", "-ZXYYXZI"},   {"1256", "-ZYXXYZI"},   {"1345", "-XZYYZXI"},
        {"1346", "YIYYIYI"},    {"1356", "-YZXXZYI"},   {"1456", "-ZZIYXXY"},   {"2345", "-XYZZYXI"},
        {"2346", "-YXZZXYI"},   {"2356", "YYIIYYI"},    {"2456", "-ZYXZIXY"},   {"3456", "-YZXZXIY"},
        {"12345", "-XYZYZIX"},  {"12346", "-YXZYIZX"},  {"12356", "-YYIXZZX"},  {"12456", "-ZYXYXIZ"},
        {"13456", "-YZXYIXZ"},  {"23456", "-YYIZXXZ"},  {"123456", "YYIYIIY"},
    };
}

std::vector<ListingMismatch> compare_listing(const StabilizerCode& c, const std::vector<ListingEntry>& listing) {
    std::map<std::string, std::string> computed;
    for (unsigned m = 1; m < c.elements.size(); ++m) computed[StabilizerCode::product_label(m)] = c.elements[m].to_string();
    std::vector<ListingMismatch> out;
    std::set<std::string> seen;
    for (const auto& e : listing) {
        seen.insert(e.label);
        auto it = computed.find(e.label);
        std::string got = it == computed.end() ? "<no such element>" : it->second;
        if (got != e.printed) out.push_back({e.label, e.printed, got});
    }
    for (const auto& [label, value] : computed)
        if (!seen.count(label)) out.push_back({label, "<missing>", value});
    return out;
}

int context_sign(std::span<const PauliOperator> points) {
    if (points.empty()) throw std::invalid_argument("context_sign: empty context");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (!commutes(points[i], points[j])) throw std::invalid_argument("context_sign: non-commuting context");
    PauliOperator p = product(points);
    if (!p.vec().is_zero()) throw std::invalid_argument("context_sign: product is not +-identity");
    if (!p.is_hermitian()) throw std::invalid_argument("context_sign: product has phase +-i");
    return p.sign();
}

SplitLabeling split(const StabilizerCode& c, std::vector<int> left) {
    std::sort(left.begin(), left.end());
    if (left.size() < 2 || left.size() > 3) throw std::invalid_argument("split: left side must have 2 or 3 qubits");
    if (std::adjacent_find(left.begin(), left.end()) != left.end()) throw std::invalid_argument("split: repeated position");
    for (int p : left)
        if (p < 0 || p >= c.n_qubits) throw std::out_of_range("split: position out of range");
    SplitLabeling s;
    s.code = &c;
    s.left_positions = left;
    for (int i = 0; i < c.n_qubits; ++i)
        if (!std::binary_search(left.begin(), left.end(), i)) s.right_positions.push_back(i);
    std::set<std::uint16_t> seen;
    for (const auto& e : c.elements) {
        s.left_labels.push_back(restrict(e, s.left_positions));
        s.right_labels.push_back(restrict(e, s.right_positions).with_phase(e.phase()));
        seen.insert(s.left_labels.back().vec().bits());
    }
    const std::size_t expect = std::size_t{1} << (2 * left.size());
    s.left_bijective = c.elements.size() == expect && seen.size() == expect;
    return s;
}

namespace {

SplitDoily doily_on(const SplitLabeling& lab, std::vector<unsigned> masks) {
    SplitDoily d;
    d.labeling = lab;
    d.points = std::move(masks);
    const auto& P = d.points;
    for (std::size_t a = 0; a < P.size(); ++a)
        for (std::size_t b = a + 1; b < P.size(); ++b)
            for (std::size_t c = b + 1; c < P.size(); ++c) {
                const auto& la = lab.left_labels[P[a]];
                const auto& lb = lab.left_labels[P[b]];
                const auto& lc = lab.left_labels[P[c]];
                if (!(la.vec() + lb.vec() + lc.vec()).is_zero()) continue;
                if (!commutes(la, lb) || !commutes(la, lc) || !commutes(lb, lc)) continue;
                SplitLine line{{P[a], P[b], P[c]}, 1, 1, 1};
                std::vector<PauliOperator> l{la, lb, lc};
                std::vector<PauliOperator> r{lab.right_labels[P[a]], lab.right_labels[P[b]], lab.right_labels[P[c]]};
                std::vector<PauliOperator> f{lab.code->elements[P[a]], lab.code->elements[P[b]], lab.code->elements[P[c]]};
                line.left_sign = context_sign(l);
                line.right_sign = context_sign(r);
                line.full_sign = context_sign(f);
                d.lines.push_back(line);
            }
    return d;
}

PointLineGeometry geometry_of(const SplitDoily& d, bool left) {
    PointLineGeometry g;
    std::map<unsigned, int> index;
    for (unsigned m : d.points) {
        index[m] = g.num_points();
        g.labels.push_back(left ? d.labeling.left_labels[m].to_string() : d.labeling.right_labels[m].to_string());
    }
    for (const auto& l : d.lines) g.lines.push_back({index[l.elements[0]], index[l.elements[1]], index[l.elements[2]]});
    return g;
}

}  // namespace

PointLineGeometry SplitDoily::left_geometry() const { return geometry_of(*this, true); }
PointLineGeometry SplitDoily::right_geometry() const { return geometry_of(*this, false); }

SplitDoily build_split_doily(const SplitLabeling& labeling) {
    if (!labeling.code || labeling.code->kind != CodeKind::pentagon || labeling.left_positions.size() != 2)
        throw std::invalid_argument("build_split_doily: labeling is not a pentagon 2+3 split");
    std::vector<unsigned> masks;
    for (unsigned m = 1; m < 16; ++m) masks.push_back(m);
    return doily_on(labeling, masks);
}

std::vector<std::vector<std::string>> printed_negative_lines_left() {
    return {{"XY", "YY", "ZZ"}, {"ZX", "XY", "ZY"}, {"YX", "ZY", "XZ"}};
}

std::vector<std::vector<std::string>> printed_negative_lines_right() {
    return {{"YIY", "ZIZ", "XIX"}, {"IXZ", "IYX", "IZY"}, {"XYI", "YZI", "ZXI"}};
}

PlaneClassification classify_plane(std::span<const PauliOperator> points) {
    if (points.size() != 7) throw std::invalid_argument("classify_plane: need 7 points");
    std::vector<GF2Vector> vs;
    for (const auto& p : points) vs.push_back(p.vec());
    Subspace s = span(vs);
    std::set<GF2Vector> distinct(vs.begin(), vs.end());
    if (s.rank() != 3 || distinct.size() != 7 || distinct.count(GF2Vector(vs[0].num_qubits(), 0)))
        throw std::invalid_argument("classify_plane: not a Fano plane");
    PlaneClassification r;
    r.product_sign = context_sign(points);
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c) {
                if (!(vs[a] + vs[b] + vs[c]).is_zero()) continue;
                std::array<PauliOperator, 3> l{points[a], points[b], points[c]};
                int sg = context_sign(l);
                r.lines.push_back({a, b, c});
                r.line_signs.push_back(sg);
                if (sg < 0) r.negative_lines.push_back({a, b, c});
            }
    r.cls = (r.product_sign > 0 && r.negative_lines.empty()) ? PlaneClass::positive : PlaneClass::negative;
    return r;
}

NegativePlaneInventory negative_planes_heptacode() {
    const StabilizerCode& c = heptagon_code();
    const SplitLabeling lab = split(c, {0, 1, 3});
    std::map<std::uint16_t, unsigned> by_left;
    for (unsigned m = 1; m < c.elements.size(); ++m) by_left[lab.left_labels[m].vec().bits()] = m;

    NegativePlaneInventory inv;
    for (const auto& plane : enumerate_subspaces(3, 3, SubspaceFilter::totally_isotropic)) {
        std::vector<unsigned> masks;
        for (const auto& p : plane.points()) masks.push_back(by_left.at(p.bits()));
        for (int slot = 0; slot < 4; ++slot) {
            bool all_identity = std::all_of(masks.begin(), masks.end(),
                                            [&](unsigned m) { return lab.right_labels[m].symbol(slot) == 'I'; });
            if (!all_identity) continue;
            NegativePlane np;
            np.slot = lab.right_positions[slot];
            np.elements = masks;
            for (unsigned m : masks) {
                np.left.push_back(lab.left_labels[m]);
                np.right.push_back(lab.right_labels[m]);
            }
            np.classification = classify_plane(np.right);
            np.color = PlaneColor::red;
            for (const auto& r : np.right) {
                auto sym = r.symbols();
                if (sym == "IIIY") np.color = PlaneColor::blue;
                if (sym == "IIIX") np.color = PlaneColor::green;
            }
            inv.planes.push_back(np);
        }
    }
    std::stable_sort(inv.planes.begin(), inv.planes.end(), [](const auto& a, const auto& b) {
        return a.slot != b.slot ? a.slot < b.slot : static_cast<int>(a.color) < static_cast<int>(b.color);
    });

    auto meet = [](const NegativePlane& a, const NegativePlane& b) {
        std::vector<unsigned> x = a.elements, y = b.elements, out;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
        return out;
    };
    inv.triples_meet_in_lines = true;
    inv.colors_meet_in_points = true;
    for (std::size_t i = 0; i < inv.planes.size(); ++i)
        for (std::size_t j = i + 1; j < inv.planes.size(); ++j) {
            const auto& a = inv.planes[i];
            const auto& b = inv.planes[j];
            auto m = meet(a, b);
            if (a.slot == b.slot) {
                if (m.size() != 3) inv.triples_meet_in_lines = false;
            } else if (a.color == b.color) {
                if (m.size() != 1) inv.colors_meet_in_points = false;
            }
        }
    for (std::size_t i = 0; i + 2 < inv.planes.size(); i += 3) {
        auto m = meet(inv.planes[i], inv.planes[i + 1]);
        std::vector<PauliOperator> l, r;
        for (unsigned e : m) {
            l.push_back(lab.left_labels[e]);
            r.push_back(lab.right_labels[e]);
        }
        inv.common_left.push_back(l);
        inv.common_right.push_back(r);
    }
    return inv;
}

std::vector<PrintedPlane> printed_negative_planes() {
    using C = PlaneColor;
    return {
        {C::blue, 2, {"YYY", "YYI", "ZZI", "XXI", "ZZY", "IIY", "XXY"}, {"IIIY", "IYYI", "IZZI", "IXXI", "-IXXY", "IYYY", "-IZZY"}},
        {C::red, 2, {"ZZZ", "YYI", "ZZI", "XXI", "YYZ", "XXZ", "IIZ"}, {"IIIZ", "IYYI", "IZZI", "IXXI", "-IXXZ", "-IYYZ", "IZZZ"}},
        {C::green, 2, {"XXX", "YYI", "ZZI", "XXI", "IIX", "ZZX", "YYX"}, {"IIIX", "IYYI", "IZZI", "IXXI", "IXXX", "-IYYX", "-IZZX"}},
        {C::blue, 4, {"YYY", "YIY", "ZIZ", "XIX", "ZYZ", "IYI", "XYX"}, {"IIIY", "YIYI", "ZIZI", "XIXI", "-XIXY", "YIYY", "-ZIZY"}},
        {C::red, 4, {"ZZZ", "YIY", "ZIZ", "XIX", "YZY", "XZX", "IZI"}, {"IIIZ", "YIYI", "ZIZI", "XIXI", "-XIXZ", "-YIYZ", "ZIZZ"}},
        {C::green, 4, {"XXX", "YIY", "ZIZ", "XIX", "IXI", "ZXZ", "YXY"}, {"IIIX", "YIYI", "ZIZI", "XIXI", "XIXX", "-YIYX", "-ZIZX"}},
        {C::blue, 5, {"YYY", "IYY", "IZZ", "IXX", "YZZ", "YII", "YXX"}, {"IIIY", "YYII", "ZZII", "XXII", "-XXIY", "YYIY", "-ZZIY"}},
        {C::red, 5, {"ZZZ", "IYY", "IZZ", "IXX", "ZYY", "ZXX", "ZII"}, {"IIIZ", "YYII", "ZZII", "XXII", "-XXIZ", "-YYIZ", "ZZIZ"}},
        {C::green, 5, {"XXX", "IYY", "IZZ", "IXX", "XII", "XZZ", "XYY"}, {"IIIX", "YYII", "ZZII", "XXII", "XXIX", "-YYIX", "-ZZIX"}},
    };
}

std::array<int, 4> type23_statistics(const SplitLabeling& labeling) {
    if (!labeling.code || labeling.code->kind != CodeKind::heptagon || labeling.right_positions.size() != 4)
        throw std::invalid_argument("type23_statistics: need a heptagon 3+4 split");
    std::array<int, 4> h{0, 0, 0, 0};
    for (std::size_t m = 1; m < labeling.right_labels.size(); ++m) {
        auto s = labeling.right_labels[m].symbols();
        int ids = static_cast<int>(std::count(s.begin(), s.end(), 'I'));
        if (ids > 3) throw std::logic_error("type23_statistics: identity right label");
        ++h[ids];
    }
    return h;
}

SplitDoily embedded_central_doily() {
    const StabilizerCode& c = heptagon_code();
    SplitLabeling lab = split(c, {0, 1, 3});
    std::vector<unsigned> masks;
    for (unsigned m = 1; m < c.elements.size(); ++m)
        if (c.elements[m].symbol(6) == 'I') masks.push_back(m);
    return doily_on(lab, masks);
}

}  // namespace doily
