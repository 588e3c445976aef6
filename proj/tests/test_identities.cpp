#include <doctest.h>

#include <numeric>
#include <set>

#include "doily/identities.hpp"

using namespace doily;

TEST_CASE("nine identity groups, each behaving as expected") {
    const auto groups = identity_groups();
    CHECK(groups.size() == 9);
    for (const auto& g : groups) {
        CAPTURE(g);
        const auto members = identity_group(g);
        CHECK_FALSE(members.empty());
        for (const auto& r : verify_identity(g)) {
            CAPTURE(r.id);
            CAPTURE(r.detail);
            CHECK(r.holds == find_identity(r.id).expected_to_hold);
        }
    }
}

TEST_CASE("every corrected identity holds; the two printed forms fail") {
    int printed_failures = 0;
    for (const auto& id : builtin_identities()) {
        const IdentityCheck c = check_identity(id);
        CAPTURE(id.id);
        CHECK(c.holds == id.expected_to_hold);
        if (!id.expected_to_hold) {
            CHECK(id.as_printed);
            CHECK_FALSE(c.detail.empty());
            ++printed_failures;
        }
    }
    CHECK(printed_failures == 2);
    CHECK_FALSE(check_identity(find_identity("heptagon-blue-decomposition-printed")).holds);
    CHECK_FALSE(check_identity(find_identity("heptagon-green-decomposition-printed")).holds);
    CHECK(check_identity(find_identity("heptagon-blue-decomposition")).holds);
    CHECK(check_identity(find_identity("heptagon-green-decomposition")).holds);
}

TEST_CASE("identity terms are orthogonal and their norms add up to the left side") {
    for (const char* name : {"pentagon-bell-decomposition", "pentagon-chi-decomposition", "heptagon-red-decomposition"}) {
        const auto& id = find_identity(name);
        for (const auto& s : test_secrets()) {
            const StateVector lhs = identity_lhs(id, s);
            Amplitude total(0);
            for (std::size_t a = 0; a < id.terms.size(); ++a) {
                const StateVector ta = identity_term_state(id, id.terms[a], s);
                total += ta.norm_squared();
                for (std::size_t b = a + 1; b < id.terms.size(); ++b)
                    CHECK(inner(ta, identity_term_state(id, id.terms[b], s)).is_zero());
            }
            CHECK(total == lhs.norm_squared());
        }
    }
}

TEST_CASE("a corrupted term coefficient breaks an identity") {
    DecompositionIdentity id = find_identity("pentagon-bell-decomposition");
    id.terms[1].coefficient = -id.terms[1].coefficient;
    CHECK_FALSE(check_identity(id).holds);
}

TEST_CASE("pentagon identities survive every cyclic relabeling of the qubits") {
    for (const auto& id : builtin_identities()) {
        if (id.code != CodeKind::pentagon) continue;
        for (int shift = 1; shift < 5; ++shift) {
            std::vector<int> perm(5);
            for (int i = 0; i < 5; ++i) perm[i] = (i + shift) % 5;
            CAPTURE(id.id);
            CAPTURE(shift);
            CHECK(check_identity(id.relabeled(perm, id.id + "-shift")).holds);
        }
    }
}

TEST_CASE("unknown identity names are rejected") {
    CHECK_THROWS(find_identity("no-such-identity"));
    CHECK_THROWS(verify_identity("no-such-identity"));
}
