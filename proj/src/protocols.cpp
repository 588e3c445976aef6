#include "doily/protocols.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <random>
#include <sstream>

namespace doily {

namespace {

std::size_t bit_of(int n, int qubit) { return std::size_t{1} << (n - 1 - qubit); }

Probability to_probability(const Amplitude& a) {
    if (a.y() != GaussInt{} || a.x().im != 0 || a.x().re < 0)
        throw std::logic_error("branch probability is not a nonnegative dyadic rational");
    return {a.x().re, a.k()};
}

std::string binary(int v, int width) {
    std::string s;
    for (int b = width - 1; b >= 0; --b) s += (v >> b) & 1 ? '1' : '0';
    return s;
}

ProtocolSpec make(std::string id, std::string description, CodeKind code, std::vector<int> measuring, int recovery,
                  BasisFamily family, std::vector<std::pair<std::string, int>> table, std::string identity) {
    ProtocolSpec s;
    s.id = std::move(id);
    s.description = std::move(description);
    s.code = code;
    s.measuring = std::move(measuring);
    s.recovery = recovery;
    s.cooperating = s.measuring;
    s.cooperating.push_back(recovery);
    std::sort(s.cooperating.begin(), s.cooperating.end());
    s.family = family;
    const auto& states = basis_states(family);
    for (std::size_t j = 0; j < table.size(); ++j)
        s.corrections.push_back({states.at(j).name, table[j].first, table[j].second});
    s.identity_id = std::move(identity);
    s.validate();
    return s;
}

std::vector<ProtocolSpec> build() {
    std::vector<ProtocolSpec> out;
    // outcome order follows basis_states: ++ +- -+ --, then the b = 0/1 split for three-qubit bases
    out.push_back(make("pentagon-branching", "parties 3,5 measure in the phi basis, party 4 recovers",
                       CodeKind::pentagon, {2, 4}, 3, BasisFamily::phi, {{"Z", 0}, {"X", 2}, {"ZX", 0}, {"I", 0}},
                       "pentagon-bell-decomposition"));
    out.push_back(make("pentagon-chi", "parties 3,4 measure in the chi basis, party 5 recovers", CodeKind::pentagon,
                       {2, 3}, 4, BasisFamily::chi, {{"Zr", 0}, {"Xr", 0}, {"Yr", 2}, {"r", 1}},
                       "pentagon-chi-decomposition"));
    out.push_back(relabel_spec(out.back(), {1, 0, 4, 3, 2}, "pentagon-chi-swap"));
    out.back().description = "parties 4,5 measure in the chi basis, party 3 recovers";

    struct Plane {
        const char* color;
        BasisFamily family;
        const char* identity;
        std::vector<std::pair<std::string, int>> table;
    };
    const std::vector<Plane> planes = {
        {"red", BasisFamily::Phi, "heptagon-red-decomposition",
         {{"I", 0}, {"I", 0}, {"X", 0}, {"X", 0}, {"Z", 0}, {"Z", 0}, {"ZX", 0}, {"ZX", 0}}},
        {"blue", BasisFamily::Sigma, "heptagon-blue-decomposition",
         {{"I", 0}, {"I", 0}, {"YZ", 0}, {"ZY", 0}, {"Z", 0}, {"Z", 0}, {"Y", 0}, {"Y", 0}}},
        {"green", BasisFamily::Omega, "heptagon-green-decomposition",
         {{"I", 0}, {"I", 0}, {"X", 0}, {"X", 0}, {"Z", 0}, {"Z", 0}, {"ZX", 0}, {"XZ", 0}}},
    };
    // cyclic relabeling of qubits 3,5,6 (1-based) preserving the heptagon group
    const std::vector<int> sigma = {3, 0, 4, 1, 5, 2, 6};
    std::vector<int> sigma2(7);
    for (int i = 0; i < 7; ++i) sigma2[i] = sigma[sigma[i]];
    for (const auto& p : planes) {
        const std::string id = std::string("heptagon-") + p.color;
        out.push_back(make(id, std::string("parties 5,6,7 measure in the ") + p.color + " plane basis, party 3 recovers",
                           CodeKind::heptagon, {4, 5, 6}, 2, p.family, p.table, p.identity));
        const ProtocolSpec base = out.back();
        out.push_back(relabel_spec(base, sigma, id + "-slot5"));
        out.back().description = std::string("cyclic image of the ") + p.color + " protocol, party 5 recovers";
        out.push_back(relabel_spec(base, sigma2, id + "-slot6"));
        out.back().description = std::string("cyclic image of the ") + p.color + " protocol, party 6 recovers";
    }
    return out;
}

}  // namespace

std::string to_string(BasisFamily f) {
    switch (f) {
        case BasisFamily::phi: return "phi";
        case BasisFamily::chi: return "chi";
        case BasisFamily::Phi: return "Phi";
        case BasisFamily::Sigma: return "Sigma";
        case BasisFamily::Omega: return "Omega";
    }
    return "?";
}

const std::vector<NamedState>& basis_states(BasisFamily f) {
    const auto& b = standard_bases();
    switch (f) {
        case BasisFamily::phi: return b.phi;
        case BasisFamily::chi: return b.chi;
        case BasisFamily::Phi: return b.Phi;
        case BasisFamily::Sigma: return b.Sigma;
        case BasisFamily::Omega: return b.Omega;
    }
    throw std::invalid_argument("unknown basis family");
}

ExactMatrix Correction::matrix() const {
    const auto& u = special_unitaries();
    ExactMatrix m = ExactMatrix::identity(2);
    for (char c : word) {
        switch (c) {
            case 'I': break;
            case 'X':
            case 'Y':
            case 'Z': m = m * ExactMatrix::from_pauli(PauliOperator::parse(std::string(1, c))); break;
            case 'R': m = m * u.R; break;
            case 'r': m = m * u.R.adjoint(); break;
            default: throw std::invalid_argument("bad correction word '" + word + "'");
        }
    }
    return Amplitude::omega_power(2 * i_power) * m;
}

std::string Correction::to_string() const {
    static const char* prefix[4] = {"", "i", "-", "-i"};
    std::string w;
    for (char c : word) w += c == 'r' ? "R^-1" : std::string(1, c);
    return prefix[((i_power % 4) + 4) % 4] + w;
}

void ProtocolSpec::validate() const {
    const int n = doily::code(code).n_qubits;
    const std::size_t expected = code == CodeKind::pentagon ? 4 : 8;
    if (corrections.size() != expected) throw ContractError(id + ": wrong correction table size");
    if (basis_states(family).size() != expected) throw ContractError(id + ": basis family does not match the code");
    if (recovery < 0 || recovery >= n) throw ContractError(id + ": recovery party out of range");
    if (std::find(measuring.begin(), measuring.end(), recovery) != measuring.end())
        throw ContractError(id + ": recovery party measures");
    if (!std::binary_search(cooperating.begin(), cooperating.end(), recovery))
        throw ContractError(id + ": recovery party not cooperating");
    for (int q : measuring)
        if (!std::binary_search(cooperating.begin(), cooperating.end(), q))
            throw ContractError(id + ": measuring party not cooperating");
}

DecompositionIdentity ProtocolSpec::backing_identity() const {
    const auto& base = find_identity(identity_id);
    return relabel.empty() ? base : base.relabeled(relabel, id + "-identity");
}

ProtocolSpec relabel_spec(const ProtocolSpec& s, const std::vector<int>& perm, std::string new_id) {
    const int n = doily::code(s.code).n_qubits;
    if (static_cast<int>(perm.size()) != n) throw DimensionError("relabel_spec: wrong permutation size");
    ProtocolSpec r = s;
    r.id = std::move(new_id);
    for (int& q : r.measuring) q = perm.at(q);
    for (int& q : r.cooperating) q = perm.at(q);
    std::sort(r.cooperating.begin(), r.cooperating.end());
    r.recovery = perm.at(r.recovery);
    if (s.relabel.empty()) {
        r.relabel = perm;
    } else {
        for (int i = 0; i < n; ++i) r.relabel[i] = perm.at(s.relabel[i]);
    }
    r.validate();
    return r;
}

const std::vector<ProtocolSpec>& builtin_protocols() {
    static const std::vector<ProtocolSpec> specs = build();
    return specs;
}

const ProtocolSpec& find_protocol(const std::string& id) {
    for (const auto& s : builtin_protocols())
        if (s.id == id) return s;
    throw std::invalid_argument("unknown protocol '" + id + "'");
}

std::string Probability::to_string() const {
    if (num == 0) return "0";
    std::int64_t n = num;
    int e = log2_den;
    while (e > 0 && n % 2 == 0) {
        n /= 2;
        --e;
    }
    return std::to_string(n) + "/" + std::to_string(std::int64_t{1} << e);
}

StateVector project_onto(const StateVector& v, const std::vector<int>& positions, const StateVector& b) {
    const int n = v.num_qubits();
    const int m = static_cast<int>(positions.size());
    if (b.num_qubits() != m) throw DimensionError("project_onto: basis state size");
    std::size_t mask = 0;
    for (int q : positions) mask |= bit_of(n, q);
    auto embed = [&](std::size_t local) {
        std::size_t idx = 0;
        for (int t = 0; t < m; ++t)
            if ((local >> (m - 1 - t)) & 1U) idx |= bit_of(n, positions[t]);
        return idx;
    };
    StateVector out(n);
    for (std::size_t rest = 0; rest < v.dim(); ++rest) {
        if (rest & mask) continue;
        Amplitude overlap(0);
        for (std::size_t j = 0; j < b.dim(); ++j)
            if (!b[j].is_zero()) overlap += b[j].conj() * v[rest | embed(j)];
        if (overlap.is_zero()) continue;
        for (std::size_t j = 0; j < b.dim(); ++j)
            if (!b[j].is_zero()) out[rest | embed(j)] = b[j] * overlap;
    }
    return out;
}

Extraction extract_recovery_qubit(const StateVector& v, const std::vector<int>& measuring, const StateVector& b,
                                  int recovery) {
    const int n = v.num_qubits();
    const int m = static_cast<int>(measuring.size());
    std::size_t mask = bit_of(n, recovery);
    for (int q : measuring) mask |= bit_of(n, q);
    // rows: configurations of the remaining qubits, columns: recovery bit
    std::vector<std::array<Amplitude, 2>> rows;
    for (std::size_t rest = 0; rest < v.dim(); ++rest) {
        if (rest & mask) continue;
        std::array<Amplitude, 2> row;
        for (int r = 0; r < 2; ++r) {
            const std::size_t base = rest | (r ? bit_of(n, recovery) : 0);
            for (std::size_t j = 0; j < b.dim(); ++j) {
                if (b[j].is_zero()) continue;
                std::size_t idx = base;
                for (int t = 0; t < m; ++t)
                    if ((j >> (m - 1 - t)) & 1U) idx |= bit_of(n, measuring[t]);
                row[r] += b[j].conj() * v[idx];
            }
        }
        rows.push_back(row);
    }
    Extraction e;
    const std::array<Amplitude, 2>* pivot = nullptr;
    for (const auto& r : rows)
        if (!r[0].is_zero() || !r[1].is_zero()) {
            pivot = &r;
            break;
        }
    if (!pivot) return e;
    e.factorizes = true;
    for (const auto& r : rows)
        if (!(r[0] * (*pivot)[1] == r[1] * (*pivot)[0])) e.factorizes = false;
    e.qubit = StateVector(1, {(*pivot)[0], (*pivot)[1]});
    return e;
}

std::vector<Probability> branch_probabilities(const ProtocolSpec& spec, const SecretParam& secret) {
    const StateVector psi = encode_secret(code(spec.code), secret);
    std::vector<Probability> out;
    for (const auto& b : basis_states(spec.family))
        out.push_back(to_probability(project_onto(psi, spec.measuring, b.state).norm_squared()));
    return out;
}

int sample_outcome(const std::vector<Probability>& probs, std::uint64_t seed) {
    int k = 0;
    for (const auto& p : probs) k = std::max(k, p.log2_den);
    if (k > 62) throw std::overflow_error("sample_outcome: denominator too large");
    std::vector<std::uint64_t> scaled;
    std::uint64_t total = 0;
    for (const auto& p : probs) {
        scaled.push_back(static_cast<std::uint64_t>(p.num) << (k - p.log2_den));
        total += scaled.back();
    }
    if (total != (std::uint64_t{1} << k)) throw std::logic_error("sample_outcome: probabilities do not sum to 1");
    std::mt19937_64 rng(seed);
    const std::uint64_t u = k == 0 ? 0 : rng() >> (64 - k);
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < scaled.size(); ++j) {
        acc += scaled[j];
        if (u < acc) return static_cast<int>(j);
    }
    return static_cast<int>(scaled.size()) - 1;
}

ProtocolTranscript run(const ProtocolSpec& spec, const SecretParam& secret, std::uint64_t seed) {
    if (!secret.normalized()) throw std::invalid_argument("run: secret not normalized");
    const StateVector psi = encode_secret(code(spec.code), secret);
    const auto& basis = basis_states(spec.family);
    const auto probs = branch_probabilities(spec, secret);
    const int j = sample_outcome(probs, seed);

    ProtocolTranscript t;
    t.spec_id = spec.id;
    t.seed = seed;
    t.secret = secret;
    t.outcome_index = j;
    t.outcome = basis[j].name;
    t.probability = probs[j];
    t.message = binary(j, static_cast<int>(spec.measuring.size()));
    t.correction = spec.corrections[j].to_string();
    const Extraction e = extract_recovery_qubit(psi, spec.measuring, basis[j].state, spec.recovery);
    if (!e.factorizes) return t;
    t.recovered = (spec.corrections[j].matrix() * e.qubit).normalized();
    t.success = equal_up_to_global_phase(t.recovered, secret.state());
    return t;
}

SecretParam random_secret(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Amplitude r = Amplitude::inv_sqrt2();
    const std::pair<Amplitude, Amplitude> moduli[3] = {{1, 0}, {0, 1}, {r, r}};
    const auto& m = moduli[rng() % 3];
    const int a = static_cast<int>(rng() % 8), b = static_cast<int>(rng() % 8);
    return {Amplitude::omega_power(a) * m.first, Amplitude::omega_power(b) * m.second};
}

BranchCheck exhaustive_branch_check(const ProtocolSpec& spec) {
    BranchCheck c;
    c.spec_id = spec.id;
    c.ok = true;
    const DecompositionIdentity id = spec.backing_identity();
    const Amplitude inv_scale = id.lhs_scale.inverse();
    const auto& basis = basis_states(spec.family);
    const int n = code(spec.code).n_qubits;
    auto fail = [&](std::string msg) {
        if (c.ok) c.detail = std::move(msg);
        c.ok = false;
    };
    const auto secrets = test_secrets();
    for (std::size_t si = 0; si < secrets.size(); ++si) {
        const StateVector psi = encode_secret(code(spec.code), secrets[si]);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            BranchRow row;
            row.outcome = basis[j].name;
            const StateVector branch = project_onto(psi, spec.measuring, basis[j].state);
            row.probability = to_probability(branch.norm_squared());
            if (!(row.probability == Probability{1, static_cast<int>(spec.measuring.size())}))
                fail(row.outcome + ": probability " + row.probability.to_string());

            // the identity term carrying this outcome on the measured factor
            StateVector expected(n);
            int matched = 0;
            for (const auto& t : id.terms)
                for (const auto& f : t.factors)
                    if (f.positions == spec.measuring && f.state == basis[j].state) {
                        expected += inv_scale * identity_term_state(id, t, secrets[si]);
                        ++matched;
                    }
            row.matches_identity = matched == 1 && expected == branch;
            if (!row.matches_identity) fail(row.outcome + ": branch differs from the identity term");

            const Extraction e = extract_recovery_qubit(psi, spec.measuring, basis[j].state, spec.recovery);
            row.factorizes = e.factorizes;
            if (!e.factorizes) {
                fail(row.outcome + ": recovery qubit does not factor out");
            } else {
                const StateVector fixed = (spec.corrections[j].matrix() * e.qubit).normalized();
                row.recovered = equal_up_to_global_phase(fixed, secrets[si].state());
                if (!row.recovered) fail(row.outcome + ": correction " + spec.corrections[j].to_string() + " fails");
            }
            if (si == 0) c.rows.push_back(row);
        }
    }
    return c;
}

NoInfoReport no_information_check(CodeKind kind, const std::vector<int>& coalition) {
    const StabilizerCode& c = code(kind);
    if (coalition.empty()) throw ContractError("no_information_check: empty coalition");
    if (static_cast<int>(coalition.size()) >= c.threshold())
        throw ContractError("no_information_check: coalition at or above the threshold");
    NoInfoReport r;
    r.coalition = coalition;
    const auto secrets = test_secrets();
    const ExactMatrix first = reduced_density_matrix(encode_secret(c, secrets[0]), coalition);
    r.secret_independent = true;
    for (std::size_t s = 1; s < secrets.size(); ++s)
        if (!(reduced_density_matrix(encode_secret(c, secrets[s]), coalition) == first)) r.secret_independent = false;
    const int k = static_cast<int>(coalition.size());
    r.maximally_mixed = first == Amplitude(GaussInt{1, 0}, {}, k) * ExactMatrix::identity(std::size_t{1} << k);
    r.ok = r.secret_independent && (kind == CodeKind::heptagon || r.maximally_mixed);
    return r;
}

std::vector<std::vector<int>> sub_threshold_coalitions(CodeKind kind) {
    const StabilizerCode& c = code(kind);
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1U << c.n_qubits); ++mask) {
        if (std::popcount(mask) >= c.threshold()) continue;
        std::vector<int> q;
        for (int i = 0; i < c.n_qubits; ++i)
            if ((mask >> i) & 1U) q.push_back(i);
        out.push_back(q);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

}  // namespace doily
