#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "doily/identities.hpp"

namespace doily {

struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

enum class BasisFamily { phi, chi, Phi, Sigma, Omega };

std::string to_string(BasisFamily f);
const std::vector<NamedState>& basis_states(BasisFamily f);

// word is a matrix product read left to right over I X Y Z R r (r = R^-1), times i^i_power
struct Correction {
    std::string outcome;
    std::string word;
    int i_power = 0;

    ExactMatrix matrix() const;
    std::string to_string() const;
};

struct ProtocolSpec {
    std::string id;
    std::string description;
    CodeKind code;
    std::vector<int> cooperating;  // sorted
    std::vector<int> measuring;    // in measured-factor order
    int recovery = 0;
    BasisFamily family;
    std::vector<Correction> corrections;  // one per basis state, in basis order
    std::string identity_id;
    std::vector<int> relabel;  // qubit i -> relabel[i] applied to the backing identity; empty for none

    void validate() const;
    DecompositionIdentity backing_identity() const;
};

// qubit i of the spec lands on perm[i]
ProtocolSpec relabel_spec(const ProtocolSpec& s, const std::vector<int>& perm, std::string new_id);

const std::vector<ProtocolSpec>& builtin_protocols();
const ProtocolSpec& find_protocol(const std::string& id);

// dyadic probability num / 2^log2_den
struct Probability {
    std::int64_t num = 0;
    int log2_den = 0;

    std::string to_string() const;
    friend bool operator==(const Probability&, const Probability&) = default;
};

struct ProtocolTranscript {
    std::string spec_id;
    std::uint64_t seed = 0;
    SecretParam secret;
    int outcome_index = 0;
    std::string outcome;
    Probability probability;
    std::string message;  // outcome index in binary, sent to the recovery party
    std::string correction;
    StateVector recovered;
    bool success = false;
};

// (|b><b| on positions) v
StateVector project_onto(const StateVector& v, const std::vector<int>& positions, const StateVector& b);
// <b| on positions contracted with v, leaving the recovery qubit if the rest factorizes
struct Extraction {
    bool factorizes = false;
    StateVector qubit;
};
Extraction extract_recovery_qubit(const StateVector& v, const std::vector<int>& measuring, const StateVector& b,
                                  int recovery);

std::vector<Probability> branch_probabilities(const ProtocolSpec& spec, const SecretParam& secret);
// outcome index drawn with exact integer thresholds from one mt19937_64 output
int sample_outcome(const std::vector<Probability>& probs, std::uint64_t seed);

ProtocolTranscript run(const ProtocolSpec& spec, const SecretParam& secret, std::uint64_t seed);

// draws a secret from a fixed family of exact normalized states
SecretParam random_secret(std::uint64_t seed);

struct BranchRow {
    std::string outcome;
    Probability probability;
    bool matches_identity = false;
    bool factorizes = false;
    bool recovered = false;
};

struct BranchCheck {
    std::string spec_id;
    bool ok = false;
    std::vector<BranchRow> rows;  // per outcome, first secret
    std::string detail;
};

BranchCheck exhaustive_branch_check(const ProtocolSpec& spec);

struct NoInfoReport {
    std::vector<int> coalition;
    bool secret_independent = false;
    bool maximally_mixed = false;
    // pentagon also requires maximal mixing
    bool ok = false;
};

NoInfoReport no_information_check(CodeKind kind, const std::vector<int>& coalition);
std::vector<std::vector<int>> sub_threshold_coalitions(CodeKind kind);

}  // namespace doily
