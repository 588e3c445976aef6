#pragma once

#include <string>
#include <vector>

#include "doily/codes.hpp"
#include "doily/state.hpp"

namespace doily {

struct Projection {
    PauliOperator observable;
    int sign = 1;
};

struct IdentityTerm {
    Amplitude coefficient{1};
    std::vector<Factor> factors;  // party-order tensor factors, secret qubit excluded
    int secret_qubit = 0;
    ExactMatrix op;               // acts on the secret
    std::string op_text;
};

// lhs_scale * (product of projectors) |Psi> == sum of terms
struct DecompositionIdentity {
    std::string id;
    std::string group;
    std::string statement;
    CodeKind code;
    Amplitude lhs_scale{1};
    std::vector<Projection> projectors;  // applied right to left, i.e. last one first
    std::vector<IdentityTerm> terms;
    bool as_printed = true;      // false when a transcription error was corrected
    bool expected_to_hold = true;

    DecompositionIdentity relabeled(const std::vector<int>& perm, std::string new_id) const;
};

struct IdentityCheck {
    std::string id;
    bool holds = false;
    std::string detail;  // first mismatching amplitude when it fails
};

const std::vector<DecompositionIdentity>& builtin_identities();
const DecompositionIdentity& find_identity(const std::string& id);
// the nine groups backing the protocols
std::vector<std::string> identity_groups();
std::vector<const DecompositionIdentity*> identity_group(const std::string& group);

IdentityCheck check_identity(const DecompositionIdentity& id);
// accepts an identity id or a group name; every member must behave as expected
std::vector<IdentityCheck> verify_identity(const std::string& name);

StateVector identity_lhs(const DecompositionIdentity& id, const SecretParam& s);
StateVector identity_term_state(const DecompositionIdentity& id, const IdentityTerm& t, const SecretParam& s);

}  // namespace doily
