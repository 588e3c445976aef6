#include "doily/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <future>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "doily/contextuality.hpp"
#include "doily/polar.hpp"

namespace doily {

namespace {

using Check = std::function<bool(const SuiteOptions&, std::string&)>;

struct ClaimDef {
    std::string id;
    std::set<std::string> suites;
    std::string statement;
    Check check;
};

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep = ",") {
    std::ostringstream o;
    for (std::size_t i = 0; i < v.size(); ++i) o << (i ? sep : "") << v[i];
    return o.str();
}

std::string one_based(const std::vector<int>& qs) {
    std::string s;
    for (int q : qs) s += std::to_string(q + 1);
    return s;
}

std::set<std::string> triple_set(const std::vector<std::vector<std::string>>& lines) {
    std::set<std::string> out;
    for (auto l : lines) {
        std::sort(l.begin(), l.end());
        out.insert(join(l));
    }
    return out;
}

std::vector<std::string> sorted_strings(const std::vector<PauliOperator>& ops) {
    std::vector<std::string> s;
    for (const auto& p : ops) s.push_back(p.to_string());
    std::sort(s.begin(), s.end());
    return s;
}

bool geometry_counts(int n, const std::vector<std::size_t>& expected, std::string& detail) {
    const PolarSpace w = build_polar_space(n);
    std::vector<std::size_t> got{w.points.size()};
    for (int r = 2; r <= n; ++r) got.push_back(w.subspaces(r).size());
    detail = "points,lines,... = " + join(got);
    return got == expected;
}

std::vector<ClaimDef> registry() {
    std::vector<ClaimDef> defs;
    auto add = [&](std::string id, std::set<std::string> suites, std::string statement, Check c) {
        defs.push_back({std::move(id), std::move(suites), std::move(statement), std::move(c)});
    };

    add("ac01.w32-counts", {"geometry"}, "W(3,2) has 15 points and 15 lines",
        [](const SuiteOptions&, std::string& d) { return geometry_counts(2, {15, 15}, d); });
    add("ac01.w52-counts", {"geometry"}, "W(5,2) has 63 points, 315 lines, planes = 135",
        [](const SuiteOptions&, std::string& d) { return geometry_counts(3, {63, 315, 135}, d); });
    add("ac01.w72-counts", {"geometry"}, "W(7,2) has 255 points, 5355 lines, 11475 planes, 2295 generators",
        [](const SuiteOptions&, std::string& d) { return geometry_counts(4, {255, 5355, 11475, 2295}, d); });
    add("ac01.quadric-counts", {"geometry"}, "Q+(5,2) has 35 points and Q+(7,2) has 135 points",
        [](const SuiteOptions&, std::string& d) {
            const auto a = quadric_points(3).size(), b = quadric_points(4).size();
            d = std::to_string(a) + "," + std::to_string(b);
            return a == 35 && b == 135;
        });
    add("ac01.lagrangian-counts", {"geometry"}, "W(3,2) has 15 and W(5,2) has 135 Lagrangian subspaces",
        [](const SuiteOptions&, std::string& d) {
            const auto a = build_polar_space(2).generators().size(), b = build_polar_space(3).generators().size();
            d = std::to_string(a) + "," + std::to_string(b);
            return a == 15 && b == 135;
        });

    add("ac02.pentagon-listing", {"pentagon"}, "15 pentagon group elements recomputed from generators match the listing with signs",
        [](const SuiteOptions&, std::string& d) {
            const auto m = compare_listing(pentagon_code(), pentagon_listing());
            d = std::to_string(m.size()) + " mismatches over " + std::to_string(pentagon_listing().size()) + " entries";
            return m.empty() && pentagon_listing().size() == 15;
        });
    add("ac02.heptagon-listing", {"heptagon"},
        "63 heptagon group elements match the listing except the known entry 125 (printed -IYYZZXX, computed -IYYXXZZ)",
        [](const SuiteOptions& o, std::string& d) {
            auto listing = heptagon_listing();
            if (o.inject_fault == "sign") {
                auto& p = listing.front().printed;
                p = p.starts_with("-") ? p.substr(1) : "-" + p;
            }
            const auto m = compare_listing(heptagon_code(), listing);
            for (const auto& x : m) d += x.label + ": printed " + x.printed + " computed " + x.computed + "; ";
            return listing.size() == 63 && m.size() == 1 && m[0].label == "125" && m[0].printed == "-IYYZZXX" &&
                   m[0].computed == "-IYYXXZZ";
        });
    add("ac02.heptagon-negatives", {"heptagon"}, "42 of the 63 heptagon group elements carry a minus sign",
        [](const SuiteOptions&, std::string& d) {
            const auto& e = heptagon_code().elements;
            const auto neg = std::count_if(e.begin() + 1, e.end(), [](const PauliOperator& p) { return p.phase() == 2; });
            d = std::to_string(neg);
            return neg == 42;
        });

    add("ac03.pentagon-split-bijective", {"pentagon"}, "two-qubit labels of the 2+3 split are a bijection onto the 15 observables",
        [](const SuiteOptions&, std::string& d) {
            const auto lab = split(pentagon_code(), {0, 1});
            d = lab.left_bijective ? "bijective" : "not bijective";
            return lab.left_bijective;
        });
    add("ac03.pentagon-split-negative-lines", {"pentagon"},
        "split doily has 3 negative lines per labeling matching the printed triples (two printed two-qubit lines corrected)",
        [](const SuiteOptions&, std::string& d) {
            const SplitDoily sd = build_split_doily(split(pentagon_code(), {0, 1}));
            std::vector<std::vector<std::string>> left, right;
            for (const auto& l : sd.lines) {
                std::vector<std::string> a, b;
                for (unsigned m : l.elements) {
                    a.push_back(sd.labeling.left_labels[m].symbols());
                    b.push_back(sd.labeling.right_labels[m].symbols());
                }
                if (l.left_sign < 0) left.push_back(a);
                if (l.right_sign < 0) right.push_back(b);
            }
            const auto corrected = triple_set({{"XX", "YY", "ZZ"}, {"ZX", "XY", "YZ"}, {"YX", "ZY", "XZ"}});
            const auto printed_left = triple_set(printed_negative_lines_left());
            std::vector<std::string> typos;
            for (const auto& t : printed_left)
                if (!corrected.count(t)) typos.push_back("{" + t + "}");
            d = "left " + std::to_string(left.size()) + ", right " + std::to_string(right.size()) +
                "; printed two-qubit lines that are not lines: " + join(typos, " ");
            return left.size() == 3 && right.size() == 3 && triple_set(left) == corrected &&
                   triple_set(right) == triple_set(printed_negative_lines_right()) && typos.size() == 2;
        });
    add("ac03.heptagon-split-bijective", {"heptagon"}, "three-qubit labels of the 3+4 split are a bijection onto the 63 observables",
        [](const SuiteOptions&, std::string& d) {
            const auto lab = split(heptagon_code(), {0, 1, 3});
            d = lab.left_bijective ? "bijective" : "not bijective";
            return lab.left_bijective;
        });
    add("ac03.heptagon-type23", {"heptagon"}, "four-qubit labels by identity count: 18, 33, 9, 3",
        [](const SuiteOptions&, std::string& d) {
            const auto h = type23_statistics(split(heptagon_code(), {0, 1, 3}));
            d = join(std::vector<int>(h.begin(), h.end()));
            return h == std::array<int, 4>{18, 33, 9, 3};
        });

    auto doily_system = [] {
        const PointLineGeometry g = doily_geometry();
        std::vector<PauliOperator> labels;
        for (const auto& l : g.labels) labels.push_back(PauliOperator::parse(l));
        return line_system(g, labels);
    };
    add("ac04.doily-degree", {"pentagon", "contextuality"}, "doily degree of contextuality is 3 by exhaustive search over 2^15 assignments, under 5 s",
        [doily_system](const SuiteOptions&, std::string& d) {
            const auto t0 = std::chrono::steady_clock::now();
            const DegreeResult r = degree_exhaustive(doily_system());
            const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            d = "degree " + std::to_string(r.upper) + " (" + r.method + "), violated lines " + join(r.violated);
            if (s >= 5) d += ", too slow";
            return r.exact && r.upper == 3 && s < 5;
        });
    add("ac04.doily-max-lift", {"pentagon", "contextuality"}, "at most 12 doily lines lift consistently to stabilizer groups",
        [doily_system](const SuiteOptions&, std::string& d) {
            const LiftResult r = max_stabilizer_lift(doily_system());
            d = std::to_string(r.satisfied);
            return r.satisfied == 12;
        });
    add("ac04.w52-plane-degree", {"heptagon", "contextuality"},
        "W(5,2) plane degree of contextuality reported as a certified interval",
        [](const SuiteOptions& o, std::string& d) {
            const IncidenceSystem sys = plane_system_w52(canonical_w52_labels());
            BoundOptions b;
            b.seed = o.seed;
            const DegreeResult r = plane_contextuality_w52(sys, b);
            const auto v = violated_contexts(sys, r.witness);
            d = "[" + std::to_string(r.lower) + ", " + std::to_string(r.upper) + "] via " + r.method;
            return r.lower >= 1 && r.lower <= r.upper && static_cast<int>(v.size()) == r.upper;
        });

    for (const auto& g : identity_groups()) {
        const std::string code = g.starts_with("pentagon") ? "pentagon" : "heptagon";
        add("ac05.identity." + g, {code, "protocols"},
            identity_group(g).size() == 1 ? identity_group(g).front()->statement + ", exactly for all test secrets"
                                          : g + ": each branch identity holds exactly for all test secrets",
            [g](const SuiteOptions&, std::string& d) {
                bool ok = true;
                for (const auto& c : verify_identity(g)) {
                    const bool expected = find_identity(c.id).expected_to_hold;
                    ok = ok && c.holds == expected;
                    if (!expected) d += c.id + " fails as documented: " + c.detail + "; ";
                    if (c.holds != expected) d += c.id + " unexpected: " + (c.holds ? "holds" : c.detail) + "; ";
                }
                if (d.empty()) d = "all members hold";
                return ok;
            });
    }

    for (const auto& s : builtin_protocols()) {
        const std::string code = s.code == CodeKind::pentagon ? "pentagon" : "heptagon";
        const std::string id = s.id;
        add("ac06.recovery." + id, {code, "protocols"}, "every outcome of " + id + " recovers the secret exactly",
            [id](const SuiteOptions&, std::string& d) {
                const BranchCheck c = exhaustive_branch_check(find_protocol(id));
                d = c.ok ? std::to_string(c.rows.size()) + " outcomes recover" : c.detail;
                return c.ok;
            });
        add("ac06.sampling." + id, {code, "protocols"}, "seeded outcome frequencies of " + id + " are uniform within 3 sigma",
            [id](const SuiteOptions& o, std::string& d) {
                const ProtocolSpec& spec = find_protocol(id);
                std::vector<int> counts(spec.corrections.size());
                int failures = 0;
                for (int k = 0; k < o.sample_runs; ++k) {
                    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(k);
                    const ProtocolTranscript t = run(spec, random_secret(seed), seed);
                    ++counts[t.outcome_index];
                    failures += !t.success;
                }
                const double n = o.sample_runs, p = 1.0 / counts.size();
                const double sigma = std::sqrt(n * p * (1 - p));
                double worst = 0;
                for (int c : counts) worst = std::max(worst, std::abs(c - n * p) / sigma);
                std::ostringstream out;
                out << "counts " << join(counts) << ", max deviation " << worst << " sigma, failures " << failures;
                d = out.str();
                return failures == 0 && worst <= 3.0 && o.sample_runs >= 4000;
            });
    }

    add("ac07.pentagon-no-information", {"pentagon", "protocols"}, "all 15 pentagon coalitions below threshold see I/2^k",
        [](const SuiteOptions&, std::string& d) {
            int ok = 0, total = 0;
            for (const auto& c : sub_threshold_coalitions(CodeKind::pentagon)) {
                ok += no_information_check(CodeKind::pentagon, c).ok;
                ++total;
            }
            d = std::to_string(ok) + "/" + std::to_string(total);
            return ok == 15 && total == 15;
        });
    add("ac07.heptagon-no-information", {"heptagon", "protocols"},
        "all 63 heptagon coalitions below threshold see a secret-independent state",
        [](const SuiteOptions&, std::string& d) {
            int ok = 0, total = 0, mixed = 0;
            std::vector<std::string> leaking;
            for (const auto& c : sub_threshold_coalitions(CodeKind::heptagon)) {
                const NoInfoReport r = no_information_check(CodeKind::heptagon, c);
                ok += r.secret_independent;
                mixed += r.maximally_mixed;
                ++total;
                if (!r.secret_independent) leaking.push_back(one_based(c));
            }
            d = std::to_string(ok) + "/" + std::to_string(total) + " secret-independent, " + std::to_string(mixed) +
                " maximally mixed";
            if (!leaking.empty()) d += "; leaking (supports of weight-3 logical operators): " + join(leaking, " ");
            return ok == 63 && total == 63;
        });

    add("ac08.klein-injective", {"geometry"}, "the 35 lines of PG(3,2) map to 35 distinct points of the Klein quadric",
        [](const SuiteOptions&, std::string& d) {
            const auto lines = enumerate_subspaces(2, 2, SubspaceFilter::all);
            std::set<int> images;
            bool on_quadric = true;
            for (const auto& l : lines) {
                const auto p = plucker_line_map(l).plucker;
                images.insert(p);
                on_quadric = on_quadric && klein_form(p) == 0;
            }
            d = std::to_string(lines.size()) + " lines, " + std::to_string(images.size()) + " images";
            return lines.size() == 35 && images.size() == 35 && on_quadric;
        });
    add("ac08.klein-real-doily", {"geometry"}, "images of the isotropic lines with their light rays are isomorphic to W(3,2)",
        [](const SuiteOptions&, std::string& d) {
            const KleinRealDoily k = klein_real_doily();
            const bool gq = is_gq22(k.geometry);
            const bool iso = find_isomorphism(k.geometry, doily_geometry()).has_value();
            d = std::to_string(k.points.size()) + " points, " + std::to_string(k.geometry.lines.size()) + " light rays";
            return k.points.size() == 15 && gq && iso;
        });
    add("ac08.klein-adjacency", {"geometry"}, "isotropic lines intersect iff their Klein images are orthogonal (105 pairs)",
        [](const SuiteOptions&, std::string& d) {
            const PolarSpace w = build_polar_space(2);
            const auto& lines = w.lines();
            int pairs = 0, agree = 0;
            for (std::size_t a = 0; a < lines.size(); ++a)
                for (std::size_t b = a + 1; b < lines.size(); ++b) {
                    std::vector<GF2Vector> g = lines[a].generators();
                    g.insert(g.end(), lines[b].generators().begin(), lines[b].generators().end());
                    const bool meet = gf2_rank(g) <= 3;
                    const bool orth = klein_polar_form(plucker_line_map(lines[a]).plucker,
                                                       plucker_line_map(lines[b]).plucker) == 0;
                    ++pairs;
                    agree += meet == orth;
                }
            d = std::to_string(agree) + "/" + std::to_string(pairs);
            return pairs == 105 && agree == 105;
        });

    add("ac09.negative-planes", {"heptagon"}, "search finds exactly 9 negative heptacode planes, matching the printed listing",
        [](const SuiteOptions&, std::string& d) {
            const auto inv = negative_planes_heptacode();
            const auto printed = printed_negative_planes();
            int matched = 0;
            for (const auto& p : printed)
                for (const auto& q : inv.planes) {
                    if (q.color != p.color || q.slot != p.slot) continue;
                    auto pl = p.left, pr = p.right;
                    std::sort(pl.begin(), pl.end());
                    std::sort(pr.begin(), pr.end());
                    if (sorted_strings(q.left) == pl && sorted_strings(q.right) == pr) ++matched;
                }
            d = std::to_string(inv.planes.size()) + " found, " + std::to_string(matched) + " match";
            return inv.planes.size() == 9 && matched == 9;
        });
    add("ac09.plane-triples", {"heptagon"}, "the 9 planes form 3 triples meeting in common lines, colors meeting in points",
        [](const SuiteOptions&, std::string& d) {
            const auto inv = negative_planes_heptacode();
            for (const auto& l : inv.common_left) d += "{" + join(sorted_strings(l)) + "} ";
            return inv.triples_meet_in_lines && inv.colors_meet_in_points && inv.common_left.size() == 3;
        });
    add("ac09.plucker-grid", {"heptagon", "geometry"},
        "the 9 Plucker-pair observables form a grid with 3 negative lines, lie on Q+(7,2), commute with YIII",
        [](const SuiteOptions&, std::string& d) {
            const PluckerReport r = verify_plucker_plane_pairs(plucker_pairs());
            d = "negative grid lines " + std::to_string(r.negative_grid_lines) + ", positive " +
                std::to_string(r.positive_grid_lines);
            if (!r.problems.empty()) d += "; " + join(r.problems, "; ");
            return r.ok() && r.grid && r.symmetric && r.commute_with_yiii && r.negative_grid_lines == 3;
        });

    add("ac10.doily-spreads", {"geometry"}, "the doily has 6 spreads",
        [](const SuiteOptions&, std::string& d) {
            const auto n = doily_spreads().size();
            d = std::to_string(n);
            return n == 6;
        });
    add("ac10.spread-mub", {"geometry"}, "a signed spread lift gives 5 stabilizer bases, pairwise unbiased with overlap 1/4",
        [](const SuiteOptions&, std::string& d) {
            const MubReport r = spread_mub_check(confi_lift());
            d = r.ok ? std::to_string(r.bases.size()) + " bases" : r.detail;
            return r.ok && r.bases.size() == 5;
        });

    std::sort(defs.begin(), defs.end(), [](const ClaimDef& a, const ClaimDef& b) { return a.id < b.id; });
    return defs;
}

const std::vector<ClaimDef>& claims() {
    static const std::vector<ClaimDef> defs = registry();
    return defs;
}

Claim execute(const ClaimDef& def, const SuiteOptions& opt) {
    Claim c{def.id, def.statement, false, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        c.pass = def.check(opt, c.detail);
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = std::string("exception: ") + e.what();
    }
    c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

std::string utc_now() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

const Claim* VerificationReport::first_failure() const {
    for (const auto& c : claims)
        if (!c.pass) return &c;
    return nullptr;
}

std::vector<std::string> suites() { return {"all", "pentagon", "heptagon", "geometry", "contextuality", "protocols"}; }

std::vector<std::string> suite_claim_ids(const std::string& suite) {
    const auto s = suites();
    if (std::find(s.begin(), s.end(), suite) == s.end()) throw UsageError("unknown suite '" + suite + "'");
    std::vector<std::string> ids;
    for (const auto& d : claims())
        if (suite == "all" || d.suites.count(suite)) ids.push_back(d.id);
    return ids;
}

Claim run_claim(const std::string& id, const SuiteOptions& opt) {
    for (const auto& d : claims())
        if (d.id == id) return execute(d, opt);
    throw UsageError("unknown claim '" + id + "'");
}

VerificationReport run_suite(const std::string& suite, const SuiteOptions& opt) {
    const auto ids = suite_claim_ids(suite);
    VerificationReport r;
    r.suite = suite;
    r.timestamp = utc_now();
    r.claims.resize(ids.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < ids.size(); i = next++) r.claims[i] = run_claim(ids[i], opt);
    };
    const unsigned n = opt.parallel ? std::max(2U, std::thread::hardware_concurrency()) : 1U;
    std::vector<std::future<void>> pool;
    for (unsigned t = 0; t < n; ++t) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
    r.pass = std::all_of(r.claims.begin(), r.claims.end(), [](const Claim& c) { return c.pass; });
    return r;
}

std::string report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["version"] = r.version;
    j["timestamp"] = r.timestamp;
    j["pass"] = r.pass;
    const Claim* f = r.first_failure();
    j["first_failure"] = f ? nlohmann::ordered_json(f->id) : nlohmann::ordered_json(nullptr);
    j["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : r.claims)
        j["claims"].push_back({{"id", c.id},
                               {"anchor", c.statement},
                               {"status", c.pass ? "pass" : "fail"},
                               {"detail", c.detail},
                               {"elapsed_ms", std::round(c.elapsed_ms * 10) / 10}});
    return j.dump(2) + "\n";
}

std::string report_table(const VerificationReport& r) {
    std::ostringstream o;
    std::size_t w = 0;
    for (const auto& c : r.claims) w = std::max(w, c.id.size());
    for (const auto& c : r.claims) {
        o << (c.pass ? "PASS  " : "FAIL  ") << c.id << std::string(w - c.id.size() + 2, ' ') << c.statement << "\n";
        o << std::string(6 + w + 2, ' ') << "-> " << c.detail << "\n";
    }
    const auto failed = std::count_if(r.claims.begin(), r.claims.end(), [](const Claim& c) { return !c.pass; });
    o << "suite " << r.suite << ": " << r.claims.size() - failed << "/" << r.claims.size() << " claims pass";
    if (const Claim* f = r.first_failure()) o << ", first failure " << f->id;
    o << "\n";
    return o.str();
}

std::string transcript_json(const ProtocolTranscript& t) {
    nlohmann::ordered_json j;
    j["spec_id"] = t.spec_id;
    j["seed"] = t.seed;
    j["secret"] = {{"alpha", t.secret.alpha.to_string()}, {"beta", t.secret.beta.to_string()}};
    j["outcome"] = t.outcome;
    j["outcome_index"] = t.outcome_index;
    j["probability"] = t.probability.to_string();
    j["message"] = t.message;
    j["correction"] = t.correction;
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < t.recovered.dim(); ++i)
        if (!t.recovered[i].is_zero()) rec[std::to_string(i)] = t.recovered[i].to_string();
    j["recovered"] = rec;
    j["success"] = t.success;
    return j.dump(2) + "\n";
}

}  // namespace doily
