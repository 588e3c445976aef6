#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "doily/protocols.hpp"

using namespace doily;

namespace {

bool proportional_to_identity(const ExactMatrix& m) {
    return m(0, 1).is_zero() && m(1, 0).is_zero() && !m(0, 0).is_zero() && m(0, 0) == m(1, 1);
}

// supports of minimum-weight logical operators: brute force over all Paulis
std::set<std::vector<int>> weight3_logical_supports(const StabilizerCode& c) {
    const int n = c.n_qubits;
    std::set<GF2Vector> stab;
    for (const auto& e : c.elements) stab.insert(e.vec());
    std::set<std::vector<int>> out;
    for (unsigned b = 1; b < (1U << (2 * n)); ++b) {
        const GF2Vector v(n, static_cast<std::uint16_t>(b));
        if (stab.count(v)) continue;
        bool centralizes = true;
        for (const auto& g : c.generators) centralizes = centralizes && symplectic_form(v, g.vec()) == 0;
        if (!centralizes) continue;
        std::vector<int> sup;
        for (int i = 0; i < n; ++i)
            if (v.q(i) || v.p(i)) sup.push_back(i);
        CHECK(sup.size() >= 3);
        if (sup.size() == 3) out.insert(sup);
    }
    return out;
}

}  // namespace

TEST_CASE("builtin protocol table: 12 valid specs with unique ids") {
    const auto& specs = builtin_protocols();
    CHECK(specs.size() == 12);
    std::set<std::string> ids;
    for (const auto& s : specs) {
        CHECK_NOTHROW(s.validate());
        ids.insert(s.id);
        CHECK(std::is_sorted(s.cooperating.begin(), s.cooperating.end()));
        CHECK(static_cast<int>(s.cooperating.size()) == code(s.code).threshold());
    }
    CHECK(ids.size() == 12);
    CHECK_THROWS(find_protocol("nope"));
}

TEST_CASE("every outcome of every protocol recovers the secret exactly") {
    for (const auto& s : builtin_protocols()) {
        const BranchCheck c = exhaustive_branch_check(s);
        CAPTURE(s.id);
        CAPTURE(c.detail);
        CHECK(c.ok);
        for (const auto& row : c.rows) {
            CHECK(row.matches_identity);
            CHECK(row.factorizes);
            CHECK(row.recovered);
            CHECK(row.probability == Probability{1, static_cast<int>(s.measuring.size())});
        }
    }
}

TEST_CASE("correction times branch operator is a multiple of the identity") {
    for (const auto& s : builtin_protocols()) {
        const DecompositionIdentity id = s.backing_identity();
        const auto& basis = basis_states(s.family);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            int matched = 0;
            for (const auto& t : id.terms)
                for (const auto& f : t.factors)
                    if (f.positions == s.measuring && f.state == basis[j].state) {
                        CAPTURE(s.id);
                        CAPTURE(basis[j].name);
                        CHECK(proportional_to_identity(s.corrections[j].matrix() * t.op));
                        ++matched;
                    }
            CHECK(matched == 1);
        }
    }
}

TEST_CASE("a wrong correction is detected") {
    ProtocolSpec s = find_protocol("pentagon-branching");
    s.corrections[0].word = "X";
    CHECK_FALSE(exhaustive_branch_check(s).ok);
}

TEST_CASE("cyclic relabelings of the pentagon protocol still recover") {
    const ProtocolSpec& base = find_protocol("pentagon-branching");
    for (int shift = 1; shift < 5; ++shift) {
        std::vector<int> perm(5);
        for (int i = 0; i < 5; ++i) perm[i] = (i + shift) % 5;
        const ProtocolSpec r = relabel_spec(base, perm, "shift" + std::to_string(shift));
        CHECK(r.recovery == (base.recovery + shift) % 5);
        CHECK(exhaustive_branch_check(r).ok);
    }
    CHECK_THROWS_AS(relabel_spec(base, {0, 1, 2}, "bad"), DimensionError);
}

TEST_CASE("spec validation enforces its contract") {
    ProtocolSpec s = find_protocol("pentagon-branching");
    s.measuring.push_back(s.recovery);
    CHECK_THROWS_AS(s.validate(), ContractError);
    s = find_protocol("heptagon-red");
    s.corrections.pop_back();
    CHECK_THROWS_AS(s.validate(), ContractError);
    s = find_protocol("pentagon-chi");
    s.family = BasisFamily::Phi;
    CHECK_THROWS_AS(s.validate(), ContractError);
}

TEST_CASE("branch probabilities are uniform dyadic and sum to one") {
    for (const auto& s : builtin_protocols())
        for (const auto& secret : test_secrets()) {
            const auto probs = branch_probabilities(s, secret);
            for (const auto& p : probs) CHECK(p == Probability{1, static_cast<int>(s.measuring.size())});
        }
    CHECK(Probability{1, 3}.to_string() == "1/8");
}

TEST_CASE("exact sampler thresholds follow the first 64-bit draw") {
    const std::vector<Probability> probs{{1, 1}, {1, 2}, {1, 2}};
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        std::mt19937_64 rng(seed);
        const std::uint64_t u = rng() >> 62;  // two bits: 0,1 -> first; 2 -> second; 3 -> third
        const int expect = u < 2 ? 0 : (u == 2 ? 1 : 2);
        CHECK(sample_outcome(probs, seed) == expect);
    }
    CHECK_THROWS(sample_outcome({{1, 1}, {1, 2}}, 0));
}

TEST_CASE("runs are deterministic in the seed and always succeed") {
    const ProtocolSpec& s = find_protocol("heptagon-red");
    const SecretParam secret = random_secret(1);
    CHECK(secret.normalized());
    const ProtocolTranscript a = run(s, secret, 1), b = run(s, secret, 1);
    CHECK(a.outcome_index == b.outcome_index);
    CHECK(a.recovered == b.recovered);
    CHECK(a.success);
    CHECK(a.probability.to_string() == "1/8");
    CHECK(a.message.size() == 3);
    CHECK(run(find_protocol("pentagon-branching"), parse_secret("1,0"), 7).success);
    CHECK_THROWS(run(s, SecretParam{Amplitude(1), Amplitude(1)}, 0));
}

TEST_CASE("sampled outcomes are roughly uniform over 4000 seeds") {
    const ProtocolSpec& s = find_protocol("pentagon-chi");
    const SecretParam secret = test_secrets()[3];
    std::vector<int> counts(4);
    for (std::uint64_t seed = 0; seed < 4000; ++seed) {
        const ProtocolTranscript t = run(s, secret, seed);
        CHECK(t.success);
        ++counts[t.outcome_index];
    }
    // 3 sigma around 1000 is about 82
    for (int c : counts) CHECK(std::abs(c - 1000) < 82);
}

TEST_CASE("random secrets are exact, normalized and seed-determined") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const SecretParam a = random_secret(seed), b = random_secret(seed);
        CHECK(a.normalized());
        CHECK(a.alpha == b.alpha);
        CHECK(a.beta == b.beta);
    }
}

TEST_CASE("pentagon coalitions of one or two parties see the maximally mixed state") {
    const auto coalitions = sub_threshold_coalitions(CodeKind::pentagon);
    CHECK(coalitions.size() == 15);
    for (const auto& c : coalitions) {
        const NoInfoReport r = no_information_check(CodeKind::pentagon, c);
        CHECK(r.secret_independent);
        CHECK(r.maximally_mixed);
        CHECK(r.ok);
    }
}

TEST_CASE("heptagon: exactly the supports of weight-3 logical operators leak the secret") {
    const auto leaking_oracle = weight3_logical_supports(heptagon_code());
    CHECK(leaking_oracle.size() == 7);
    const auto coalitions = sub_threshold_coalitions(CodeKind::heptagon);
    CHECK(coalitions.size() == 63);
    std::set<std::vector<int>> leaking;
    int independent = 0, mixed = 0;
    for (const auto& c : coalitions) {
        const NoInfoReport r = no_information_check(CodeKind::heptagon, c);
        independent += r.secret_independent;
        mixed += r.maximally_mixed;
        if (!r.secret_independent) leaking.insert(c);
        CHECK(r.maximally_mixed == r.secret_independent);
    }
    CHECK(independent == 56);
    CHECK(mixed == 56);
    CHECK(leaking == leaking_oracle);
}

TEST_CASE("no-information checks refuse empty or threshold-sized coalitions") {
    CHECK_THROWS_AS(no_information_check(CodeKind::pentagon, {}), ContractError);
    CHECK_THROWS_AS(no_information_check(CodeKind::pentagon, {0, 1, 2}), ContractError);
    CHECK_THROWS_AS(no_information_check(CodeKind::heptagon, {0, 1, 2, 3}), ContractError);
}

TEST_CASE("correction words") {
    const auto& u = special_unitaries();
    CHECK(Correction{"", "Zr", 0}.matrix() == ExactMatrix::from_pauli(PauliOperator::parse("Z")) * u.R.adjoint());
    CHECK(Correction{"", "I", 2}.matrix() == Amplitude(-1) * ExactMatrix::identity(2));
    CHECK(Correction{"", "R", 0}.matrix() * Correction{"", "r", 0}.matrix() == ExactMatrix::identity(2));
}
