#include <doctest.h>

#include <map>
#include <regex>
#include <set>

#include "doily/export.hpp"
#include "doily/polar.hpp"
#include "doily/report.hpp"

using namespace doily;

namespace {

using Incidence = std::set<std::pair<std::set<int>, bool>>;

Incidence incidence(const IncidenceExport& e) {
    Incidence s;
    for (const auto& l : e.lines) s.insert({{l.points.begin(), l.points.end()}, l.negative});
    return s;
}

// read the bipartite DOT back with regexes, independent of the writer
Incidence incidence_from_dot(const std::string& dot, int& point_nodes) {
    std::map<int, bool> negative;
    std::map<int, std::set<int>> members;
    const std::regex line_node(R"(\bl(\d+) \[kind=line[^\]]*negative=(true|false))");
    const std::regex edge(R"(\bl(\d+) -- p(\d+);)");
    const std::regex point_node(R"(\bp\d+ \[kind=point)");
    for (std::sregex_iterator it(dot.begin(), dot.end(), line_node), end; it != end; ++it)
        negative[std::stoi((*it)[1])] = (*it)[2] == "true";
    for (std::sregex_iterator it(dot.begin(), dot.end(), edge), end; it != end; ++it)
        members[std::stoi((*it)[1])].insert(std::stoi((*it)[2]));
    point_nodes = static_cast<int>(std::distance(std::sregex_iterator(dot.begin(), dot.end(), point_node), std::sregex_iterator()));
    Incidence s;
    for (const auto& [l, pts] : members) s.insert({pts, negative.at(l)});
    return s;
}

int negatives(const IncidenceExport& e) {
    int n = 0;
    for (const auto& l : e.lines) n += l.negative;
    return n;
}

PointLineGeometry as_geometry(const IncidenceExport& e) {
    PointLineGeometry g;
    for (const auto& p : e.points) g.labels.push_back(p.label);
    for (const auto& l : e.lines) g.lines.push_back(l.points);
    return g;
}

}  // namespace

TEST_CASE("doily-2q export: 15 points, 15 lines, 3 negative") {
    const IncidenceExport e = build_export("doily-2q");
    CHECK(e.points.size() == 15);
    CHECK(e.lines.size() == 15);
    CHECK(negatives(e) == 3);
    CHECK(is_gq22(as_geometry(e)));
}

TEST_CASE("every object: DOT and JSON carry identical incidence data") {
    for (const auto& obj : export_objects()) {
        CAPTURE(obj);
        const IncidenceExport e = build_export(obj);
        int pn = 0;
        CHECK(incidence_from_dot(to_dot(e), pn) == incidence(e));
        CHECK(pn == static_cast<int>(e.points.size()));
        const IncidenceExport back = export_from_json(to_json(e));
        CHECK(back.object == e.object);
        CHECK(incidence(back) == incidence(e));
        REQUIRE(back.points.size() == e.points.size());
        for (std::size_t i = 0; i < e.points.size(); ++i) {
            CHECK(back.points[i].label == e.points[i].label);
            CHECK(back.points[i].group == e.points[i].group);
        }
    }
}

TEST_CASE("doily-type exports are generalized quadrangles") {
    for (const char* obj : {"doily-2q", "doily-3q", "troily", "klein-doily"}) {
        CAPTURE(obj);
        CHECK(is_gq22(as_geometry(build_export(obj))));
    }
    CHECK(negatives(build_export("doily-3q")) == 3);
    CHECK(negatives(build_export("klein-doily")) == 0);
}

TEST_CASE("heptaly export groups its 63 points by identity count 18, 33, 9, 3") {
    const IncidenceExport e = build_export("heptaly");
    CHECK(e.points.size() == 63);
    CHECK(e.lines.size() == 315);
    std::map<std::string, int> groups;
    for (const auto& p : e.points) ++groups[p.group];
    CHECK(groups == std::map<std::string, int>{{"identities-0", 18}, {"identities-1", 33}, {"identities-2", 9},
                                                {"identities-3", 3}});
    const std::string dot = to_dot(e);
    CHECK(dot.find("subgraph \"cluster_identities-1\"") != std::string::npos);
}

TEST_CASE("unknown export objects are rejected") { CHECK_THROWS(build_export("pentagram")); }

TEST_CASE("report: suites list and claim ids cover every criterion") {
    CHECK(suites() == std::vector<std::string>{"all", "pentagon", "heptagon", "geometry", "contextuality", "protocols"});
    const auto ids = suite_claim_ids("all");
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    for (int k = 1; k <= 10; ++k) {
        char prefix[8];
        std::snprintf(prefix, sizeof prefix, "ac%02d.", k);
        CHECK(std::any_of(ids.begin(), ids.end(), [&](const std::string& s) { return s.starts_with(prefix); }));
    }
    const auto geo = suite_claim_ids("geometry");
    CHECK(std::find(geo.begin(), geo.end(), "ac01.w52-counts") != geo.end());
    CHECK_THROWS_AS(suite_claim_ids("bogus"), UsageError);
    CHECK_THROWS_AS(run_suite("bogus"), UsageError);
}

TEST_CASE("report: pentagon suite passes, is idempotent, and runs the same in parallel or serially") {
    SuiteOptions serial;
    serial.parallel = false;
    const VerificationReport a = run_suite("pentagon"), b = run_suite("pentagon", serial);
    CHECK(a.pass);
    CHECK(a.first_failure() == nullptr);
    REQUIRE(a.claims.size() == b.claims.size());
    for (std::size_t i = 0; i < a.claims.size(); ++i) {
        CHECK(a.claims[i].id == b.claims[i].id);
        CHECK(a.claims[i].pass == b.claims[i].pass);
        CHECK(a.claims[i].detail == b.claims[i].detail);
    }
    const std::string j = report_json(a);
    for (const char* key : {"\"suite\"", "\"version\"", "\"timestamp\"", "\"pass\"", "\"claims\"", "\"anchor\"", "\"status\""})
        CHECK(j.find(key) != std::string::npos);
}

TEST_CASE("report: an injected sign error fails the listing claim") {
    SuiteOptions opt;
    opt.inject_fault = "sign";
    const Claim c = run_claim("ac02.heptagon-listing", opt);
    CHECK_FALSE(c.pass);
    CHECK(run_claim("ac02.heptagon-listing").pass);
}
