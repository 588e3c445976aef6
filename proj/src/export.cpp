#include "doily/export.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "doily/codes.hpp"
#include "doily/polar.hpp"

namespace doily {

namespace {

IncidenceExport from_split(const std::string& name, const SplitDoily& d, bool left) {
    IncidenceExport e;
    e.object = name;
    const PointLineGeometry g = left ? d.left_geometry() : d.right_geometry();
    for (const auto& l : g.labels) e.points.push_back({l, ""});
    for (std::size_t j = 0; j < g.lines.size(); ++j)
        e.lines.push_back({g.lines[j], (left ? d.lines[j].left_sign : d.lines[j].right_sign) < 0});
    return e;
}

IncidenceExport troily() {
    const SplitDoily d = embedded_central_doily();
    IncidenceExport e;
    e.object = "troily";
    for (unsigned m : d.points)
        e.points.push_back({d.labeling.right_labels[m].to_string() + " / " + d.labeling.left_labels[m].to_string(), ""});
    std::map<unsigned, int> index;
    for (std::size_t i = 0; i < d.points.size(); ++i) index[d.points[i]] = static_cast<int>(i);
    for (const auto& l : d.lines) {
        // negative on both labelings for this embedding
        e.lines.push_back({{index[l.elements[0]], index[l.elements[1]], index[l.elements[2]]}, l.right_sign < 0});
    }
    return e;
}

IncidenceExport heptaly() {
    const StabilizerCode& c = heptagon_code();
    const SplitLabeling lab = split(c, {0, 1, 3});
    IncidenceExport e;
    e.object = "heptaly";
    for (unsigned m = 1; m < c.elements.size(); ++m) {
        const std::string s = lab.right_labels[m].symbols();
        const auto ids = std::count(s.begin(), s.end(), 'I');
        e.points.push_back({lab.right_labels[m].to_string(), "identities-" + std::to_string(ids)});
    }
    // lines of W(5,2) read off the bijective three-qubit labels
    for (unsigned a = 1; a < 64; ++a)
        for (unsigned b = a + 1; b < 64; ++b) {
            const unsigned cm = a ^ b;
            if (cm <= b) continue;
            const auto& la = lab.left_labels[a];
            const auto& lb = lab.left_labels[b];
            const auto& lc = lab.left_labels[cm];
            if (!(la.vec() + lb.vec() + lc.vec()).is_zero()) continue;
            if (!commutes(la, lb)) continue;
            std::vector<PauliOperator> r{lab.right_labels[a], lab.right_labels[b], lab.right_labels[cm]};
            e.lines.push_back({{static_cast<int>(a - 1), static_cast<int>(b - 1), static_cast<int>(cm - 1)},
                               context_sign(r) < 0});
        }
    return e;
}

IncidenceExport klein() {
    const KleinRealDoily k = klein_real_doily();
    IncidenceExport e;
    e.object = "klein-doily";
    for (const auto& p : k.points) {
        std::string bits;
        for (int j = 0; j < 6; ++j) bits += (p.plucker >> j) & 1 ? '1' : '0';
        e.points.push_back({bits, ""});
    }
    for (const auto& l : k.geometry.lines) e.lines.push_back({l, false});
    return e;
}

std::string escape(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '"' || c == '\\') o += '\\';
        o += c;
    }
    return o;
}

}  // namespace

std::vector<std::string> export_objects() { return {"doily-2q", "doily-3q", "troily", "klein-doily", "heptaly"}; }

IncidenceExport build_export(const std::string& object) {
    if (object == "doily-2q" || object == "doily-3q") {
        const SplitDoily d = build_split_doily(split(pentagon_code(), {0, 1}));
        return from_split(object, d, object == "doily-2q");
    }
    if (object == "troily") return troily();
    if (object == "klein-doily") return klein();
    if (object == "heptaly") return heptaly();
    throw std::invalid_argument("unknown export object '" + object + "'");
}

std::string to_dot(const IncidenceExport& e) {
    std::ostringstream o;
    o << "graph \"" << escape(e.object) << "\" {\n";
    std::map<std::string, std::vector<int>> groups;
    for (std::size_t i = 0; i < e.points.size(); ++i) groups[e.points[i].group].push_back(static_cast<int>(i));
    for (const auto& [g, members] : groups) {
        const std::string indent = g.empty() ? "  " : "    ";
        if (!g.empty()) o << "  subgraph \"cluster_" << escape(g) << "\" {\n    label=\"" << escape(g) << "\";\n";
        for (int i : members)
            o << indent << "p" << i << " [kind=point, shape=ellipse, label=\"" << escape(e.points[i].label) << "\"];\n";
        if (!g.empty()) o << "  }\n";
    }
    for (std::size_t j = 0; j < e.lines.size(); ++j) {
        o << "  l" << j << " [kind=line, shape=point, negative=" << (e.lines[j].negative ? "true" : "false");
        if (e.lines[j].negative) o << ", color=red";
        o << "];\n";
        for (int p : e.lines[j].points) o << "  l" << j << " -- p" << p << ";\n";
    }
    o << "}\n";
    return o.str();
}

std::string to_json(const IncidenceExport& e) {
    nlohmann::ordered_json j;
    j["object"] = e.object;
    j["points"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < e.points.size(); ++i) {
        nlohmann::ordered_json p{{"id", "p" + std::to_string(i)}, {"label", e.points[i].label}};
        if (!e.points[i].group.empty()) p["group"] = e.points[i].group;
        j["points"].push_back(p);
    }
    j["lines"] = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < e.lines.size(); ++k)
        j["lines"].push_back({{"id", "l" + std::to_string(k)}, {"points", e.lines[k].points}, {"negative", e.lines[k].negative}});
    return j.dump(2) + "\n";
}

IncidenceExport export_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    IncidenceExport e;
    e.object = j.at("object").get<std::string>();
    for (const auto& p : j.at("points")) e.points.push_back({p.at("label").get<std::string>(), p.value("group", "")});
    for (const auto& l : j.at("lines"))
        e.lines.push_back({l.at("points").get<std::vector<int>>(), l.at("negative").get<bool>()});
    return e;
}

}  // namespace doily
