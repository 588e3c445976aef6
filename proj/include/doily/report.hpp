#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "doily/protocols.hpp"

namespace doily {

inline constexpr const char* kToolVersion = "1.0.0";

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Claim {
    std::string id;
    std::string statement;  // what is being checked, in words
    bool pass = false;
    std::string detail;
    double elapsed_ms = 0;
};

struct VerificationReport {
    std::string suite;
    std::vector<Claim> claims;  // sorted by id
    bool pass = false;
    std::string version = kToolVersion;
    std::string timestamp;

    const Claim* first_failure() const;
};

struct SuiteOptions {
    std::uint64_t seed = 42;
    int sample_runs = 4000;
    // "sign" flips one printed sign of the heptagon listing before comparison
    std::string inject_fault;
    bool parallel = true;
};

std::vector<std::string> suites();
// ids of the claims a suite runs, in report order
std::vector<std::string> suite_claim_ids(const std::string& suite);

// throws UsageError on an unknown suite
VerificationReport run_suite(const std::string& suite, const SuiteOptions& opt = {});
Claim run_claim(const std::string& id, const SuiteOptions& opt = {});

std::string report_json(const VerificationReport& r);
std::string report_table(const VerificationReport& r);
std::string transcript_json(const ProtocolTranscript& t);

}  // namespace doily
