// One PASS/FAIL line per acceptance criterion, built from the claim report.
#include <cstdio>
#include <map>
#include <string>

#include "doily/report.hpp"

namespace {

struct Criterion {
    const char* title;
    double budget_ms;  // 0 when the criterion has no time limit
};

const std::map<int, Criterion> kCriteria = {
    {1, {"geometry counts", 30000}},
    {2, {"code reconstruction against the printed listings", 0}},
    {3, {"split structure", 0}},
    {4, {"contextuality degrees", 0}},
    {5, {"decomposition identities", 10000}},
    {6, {"protocol recovery and sampling", 0}},
    {7, {"no information below threshold", 0}},
    {8, {"Klein correspondence", 0}},
    {9, {"negative planes and Plucker grid", 0}},
    {10, {"spreads and mutually unbiased bases", 0}},
};

}  // namespace

int main() {
    doily::SuiteOptions opt;
    const doily::VerificationReport r = doily::run_suite("all", opt);

    struct Tally {
        int claims = 0;
        int passed = 0;
        double ms = 0;
        std::string first_failure;
    };
    std::map<int, Tally> tally;
    for (const auto& c : r.claims) {
        const int k = std::stoi(c.id.substr(2, 2));
        auto& t = tally[k];
        ++t.claims;
        t.ms += c.elapsed_ms;
        if (c.pass) {
            ++t.passed;
        } else if (t.first_failure.empty()) {
            t.first_failure = c.id + ": " + c.detail;
        }
    }

    bool all = true;
    for (const auto& [k, crit] : kCriteria) {
        const Tally& t = tally[k];
        const bool in_time = crit.budget_ms == 0 || t.ms < crit.budget_ms;
        const bool pass = t.claims > 0 && t.passed == t.claims && in_time;
        all = all && pass;
        std::printf("AC%-2d %s  %s (%d/%d claims, %.0f ms", k, pass ? "PASS" : "FAIL", crit.title, t.passed, t.claims, t.ms);
        if (crit.budget_ms > 0) std::printf(", limit %.0f ms", crit.budget_ms);
        std::printf(")");
        if (t.claims == 0) std::printf(" no claims ran");
        if (!in_time) std::printf(" over time");
        if (!t.first_failure.empty()) std::printf(" first failure %s", t.first_failure.c_str());
        std::printf("\n");
    }
    return all ? 0 : 1;
}
