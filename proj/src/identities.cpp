#include "doily/identities.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace doily {

namespace {

ExactMatrix pauli1(char c) { return ExactMatrix::from_pauli(PauliOperator::parse(std::string(1, c))); }

// matrix product of single-qubit Paulis, "XZ" = X*Z
ExactMatrix word(std::string_view w) {
    ExactMatrix m = ExactMatrix::identity(2);
    for (char c : w) m = m * pauli1(c);
    return m;
}

const StateVector& named(const std::vector<NamedState>& family, const std::string& name) {
    for (const auto& s : family)
        if (s.name == name) return s.state;
    throw std::invalid_argument("unknown basis state " + name);
}

Projection proj(std::string_view op, int sign) { return {PauliOperator::parse(op), sign}; }

// pentagon: phi on (1,2), phi on (3,5), secret on 4
IdentityTerm pentagon_bell_term(Amplitude c, const std::string& s12, const std::string& s35, std::string_view op,
                                Amplitude op_scale) {
    IdentityTerm t;
    t.coefficient = c;
    t.factors = {{{0, 1}, bell_phi(s12)}, {{2, 4}, bell_phi(s35)}};
    t.secret_qubit = 3;
    t.op = op_scale * word(op);
    t.op_text = (op_scale == Amplitude(-1) ? "-" : "") + std::string(op.empty() ? "I" : op);
    return t;
}

// pentagon: S chi on (1,2), chi on (3,4), R*op on 5
IdentityTerm pentagon_chi_term(Amplitude c, const std::string& label, std::string_view op, Amplitude op_scale,
                               std::string text) {
    const auto& u = special_unitaries();
    IdentityTerm t;
    t.coefficient = c;
    t.factors = {{{0, 1}, u.swap * bell_chi(label)}, {{2, 3}, bell_chi(label)}};
    t.secret_qubit = 4;
    t.op = u.R * (op_scale * word(op));
    t.op_text = std::move(text);
    return t;
}

// heptagon: basis state on (1,2,4), op on 3, basis state on (5,6,7)
IdentityTerm heptagon_term(const std::vector<NamedState>& family, const std::string& prefix, Amplitude c,
                           const std::string& left, std::string_view op, const std::string& right) {
    IdentityTerm t;
    t.coefficient = c;
    t.factors = {{{0, 1, 3}, named(family, prefix + left)}, {{4, 5, 6}, named(family, prefix + right)}};
    t.secret_qubit = 2;
    t.op = word(op);
    t.op_text = op.empty() ? "I" : std::string(op);
    return t;
}

struct Row {
    int sign;
    const char* left;
    const char* op;
    const char* right;
};

DecompositionIdentity heptagon_decomposition(std::string id, std::string statement, const std::vector<NamedState>& family,
                                             const std::string& prefix, const std::vector<Row>& rows) {
    DecompositionIdentity d;
    d.id = id;
    d.group = id;
    d.statement = std::move(statement);
    d.code = CodeKind::heptagon;
    d.lhs_scale = Amplitude(2) * Amplitude::sqrt2();
    for (const auto& r : rows) d.terms.push_back(heptagon_term(family, prefix, r.sign, r.left, r.op, r.right));
    return d;
}

std::vector<DecompositionIdentity> build() {
    std::vector<DecompositionIdentity> out;
    const auto& b = standard_bases();

    {
        DecompositionIdentity d;
        d.id = "pentagon-bell-branch-explicit";
        d.group = d.id;
        d.statement = "2 P-(IIXIX) Q+(IIZIZ) |Psi> = phi+-_{12} phi-+_{35} (alpha|1> - beta|0>)_4";
        d.code = CodeKind::pentagon;
        d.lhs_scale = 2;
        d.projectors = {proj("IIXIX", -1), proj("IIZIZ", +1)};
        IdentityTerm t;
        t.factors = {{{0, 1}, bell_phi("+-")}, {{2, 4}, bell_phi("-+")}};
        t.secret_qubit = 3;
        t.op = ExactMatrix(2, {0, -1, 1, 0});
        t.op_text = "alpha|1>-beta|0>";
        d.terms = {t};
        out.push_back(d);
    }

    struct PB {
        int p, q;
        const char* s12;
        const char* s35;
        const char* op;
        int op_sign;
    };
    const PB pb[4] = {{-1, +1, "+-", "-+", "XZ", 1},
                      {-1, -1, "--", "--", "", 1},
                      {+1, -1, "++", "+-", "X", -1},
                      {+1, +1, "-+", "++", "Z", 1}};
    for (int k = 0; k < 4; ++k) {
        DecompositionIdentity d;
        d.id = "pentagon-bell-branch-" + std::to_string(k + 1);
        d.group = "pentagon-bell-branch";
        d.code = CodeKind::pentagon;
        d.lhs_scale = 2;
        d.projectors = {proj("IIXIX", pb[k].p), proj("IIZIZ", pb[k].q)};
        d.terms = {pentagon_bell_term(1, pb[k].s12, pb[k].s35, pb[k].op, pb[k].op_sign)};
        d.statement = std::string("2 P") + (pb[k].p > 0 ? "+" : "-") + " Q" + (pb[k].q > 0 ? "+" : "-") +
                      " |Psi> = phi" + pb[k].s12 + "_{12} phi" + pb[k].s35 + "_{35} " + d.terms[0].op_text +
                      "|psi>_4";
        out.push_back(d);
    }
    {
        DecompositionIdentity d;
        d.id = "pentagon-bell-decomposition";
        d.group = d.id;
        d.statement = "2|Psi> = sum over the four Bell outcomes on (3,5) of phi_{12} phi_{35} M|psi>_4";
        d.code = CodeKind::pentagon;
        d.lhs_scale = 2;
        d.terms = {pentagon_bell_term(1, "--", "--", "", 1), pentagon_bell_term(1, "-+", "++", "Z", 1),
                   pentagon_bell_term(1, "+-", "-+", "XZ", 1), pentagon_bell_term(-1, "++", "+-", "X", 1)};
        out.push_back(d);
    }

    struct PC {
        int p, q;
        const char* label;
        const char* op;
        int op_sign;
        bool minus_i;
        const char* text;
    };
    const PC pc[4] = {{+1, +1, "++", "Z", 1, false, "RZ"},
                      {-1, -1, "--", "", 1, true, "R(-iI)"},
                      {-1, +1, "-+", "Y", -1, false, "R(-Y)"},
                      {+1, -1, "+-", "X", 1, false, "RX"}};
    for (int k = 0; k < 4; ++k) {
        DecompositionIdentity d;
        d.id = "pentagon-chi-branch-" + std::to_string(k + 1);
        d.group = "pentagon-chi-branch";
        d.code = CodeKind::pentagon;
        d.lhs_scale = 2;
        d.projectors = {proj("IIXYI", pc[k].p), proj("IIZXI", pc[k].q)};
        Amplitude s = pc[k].minus_i ? -Amplitude::i() : Amplitude(pc[k].op_sign);
        d.terms = {pentagon_chi_term(1, pc[k].label, pc[k].op, s, pc[k].text)};
        d.statement = std::string("2 P") + (pc[k].p > 0 ? "+" : "-") + " Q" + (pc[k].q > 0 ? "+" : "-") +
                      " |Psi> = S chi" + pc[k].label + "_{12} chi" + pc[k].label + "_{34} " + pc[k].text + "|psi>_5";
        out.push_back(d);
    }
    {
        DecompositionIdentity d;
        d.id = "pentagon-chi-decomposition";
        d.group = d.id;
        d.statement = "2|Psi> = S chi+- chi+- RX - S chi-+ chi-+ RY + S chi++ chi++ RZ - S chi-- chi-- iR";
        d.code = CodeKind::pentagon;
        d.lhs_scale = 2;
        d.terms = {pentagon_chi_term(1, "+-", "X", 1, "RX"), pentagon_chi_term(-1, "-+", "Y", 1, "RY"),
                   pentagon_chi_term(1, "++", "Z", 1, "RZ"), pentagon_chi_term(-1, "--", "", Amplitude::i(), "iR")};
        out.push_back(d);
    }

    struct HB {
        int q, r;
        const char* label;
        const char* op;
    };
    const HB hb[4] = {{+1, +1, "++", ""}, {-1, +1, "-+", "Z"}, {+1, -1, "+-", "X"}, {-1, -1, "--", "XZ"}};
    for (int k = 0; k < 4; ++k) {
        DecompositionIdentity d;
        d.id = "heptagon-bell-branch-" + std::to_string(k + 1);
        d.group = "heptagon-bell-branch";
        d.code = CodeKind::heptagon;
        d.lhs_scale = 2;
        d.projectors = {proj("IIIIXXI", hb[k].q), proj("IIIIZZI", hb[k].r)};
        IdentityTerm t;
        const StateVector phi = bell_phi(hb[k].label);
        t.factors = {{{0, 1}, phi}, {{3, 6}, phi}, {{4, 5}, phi}};
        t.secret_qubit = 2;
        t.op = word(hb[k].op);
        t.op_text = *hb[k].op ? hb[k].op : "I";
        d.terms = {t};
        d.statement = std::string("2 Q") + (hb[k].q > 0 ? "+" : "-") + " R" + (hb[k].r > 0 ? "+" : "-") +
                      " |Psi> = phi" + hb[k].label + "_{12} " + t.op_text + "|psi>_3 phi" + hb[k].label + "_{47} phi" +
                      hb[k].label + "_{56}";
        out.push_back(d);
    }

    out.push_back(heptagon_decomposition(
        "heptagon-red-decomposition", "sqrt8|Psi> = sum of Phi_{124} M|psi>_3 Phi_{567} over eight outcomes", b.Phi,
        "Phi",
        {{1, "+-0", "X", "+-1"},
         {1, "+-1", "X", "+-0"},
         {1, "--0", "XZ", "--1"},
         {-1, "--1", "XZ", "--0"},
         {1, "++0", "", "++0"},
         {1, "++1", "", "++1"},
         {1, "-+0", "Z", "-+0"},
         {-1, "-+1", "Z", "-+1"}}));

    const std::vector<Row> blue_rows = {{1, "+-0", "ZY", "+-0"},  {1, "+-1", "YZ", "+-1"}, {1, "--0", "Y", "--1"},
                                        {-1, "--1", "Y", "--0"},  {1, "++0", "", "++1"},   {1, "++1", "", "++0"},
                                        {1, "-+0", "Z", "-+0"},   {1, "-+1", "Z", "-+1"}};
    out.push_back(heptagon_decomposition("heptagon-blue-decomposition",
                                         "sqrt8|Psi> = sum of Sigma_{124} M|psi>_3 Sigma_{567}, last sign +", b.Sigma,
                                         "Sigma", blue_rows));
    out.back().as_printed = false;
    {
        auto printed = blue_rows;
        printed.back().sign = -1;
        auto d = heptagon_decomposition("heptagon-blue-decomposition-printed",
                                        "sqrt8|Psi> = sum of Sigma_{124} M|psi>_3 Sigma_{567}, last sign - as printed",
                                        b.Sigma, "Sigma", printed);
        d.group = "heptagon-blue-decomposition";
        d.expected_to_hold = false;
        out.push_back(d);
    }

    const std::vector<Row> green_rows = {{1, "+-0", "X", "+-0"},   {-1, "+-1", "X", "+-1"}, {1, "--0", "ZX", "--1"},
                                         {1, "--1", "XZ", "--0"},  {1, "++0", "", "++0"},   {1, "++1", "", "++1"},
                                         {1, "-+0", "Z", "-+1"},   {1, "-+1", "Z", "-+0"}};
    out.push_back(heptagon_decomposition("heptagon-green-decomposition",
                                         "sqrt8|Psi> = sum of Omega_{124} M|psi>_3 Omega_{567}, last factor Omega-+0",
                                         b.Omega, "Omega", green_rows));
    out.back().as_printed = false;
    {
        auto printed = green_rows;
        printed.back().right = "-+1";
        auto d = heptagon_decomposition("heptagon-green-decomposition-printed",
                                        "sqrt8|Psi> = sum of Omega_{124} M|psi>_3 Omega_{567}, last factor Omega-+1 as printed",
                                        b.Omega, "Omega", printed);
        d.group = "heptagon-green-decomposition";
        d.expected_to_hold = false;
        out.push_back(d);
    }
    return out;
}

std::string describe(const StateVector& v, std::size_t idx) {
    std::string bits;
    for (int q = 0; q < v.num_qubits(); ++q) bits += (idx >> (v.num_qubits() - 1 - q)) & 1U ? '1' : '0';
    return bits;
}

}  // namespace

DecompositionIdentity DecompositionIdentity::relabeled(const std::vector<int>& perm, std::string new_id) const {
    DecompositionIdentity d = *this;
    d.id = std::move(new_id);
    d.group = d.id;
    for (auto& p : d.projectors) p.observable = permute_qubits(p.observable, perm);
    for (auto& t : d.terms) {
        for (auto& f : t.factors)
            for (int& q : f.positions) q = perm.at(q);
        t.secret_qubit = perm.at(t.secret_qubit);
    }
    return d;
}

const std::vector<DecompositionIdentity>& builtin_identities() {
    static const std::vector<DecompositionIdentity> ids = build();
    return ids;
}

const DecompositionIdentity& find_identity(const std::string& id) {
    for (const auto& d : builtin_identities())
        if (d.id == id) return d;
    throw std::invalid_argument("unknown identity '" + id + "'");
}

std::vector<std::string> identity_groups() {
    return {"pentagon-bell-branch-explicit", "pentagon-bell-branch",      "pentagon-bell-decomposition",
            "pentagon-chi-branch",           "pentagon-chi-decomposition", "heptagon-bell-branch",
            "heptagon-red-decomposition",    "heptagon-blue-decomposition", "heptagon-green-decomposition"};
}

std::vector<const DecompositionIdentity*> identity_group(const std::string& group) {
    std::vector<const DecompositionIdentity*> out;
    for (const auto& d : builtin_identities())
        if (d.group == group) out.push_back(&d);
    return out;
}

StateVector identity_lhs(const DecompositionIdentity& id, const SecretParam& s) {
    StateVector v = encode_secret(code(id.code), s);
    for (auto it = id.projectors.rbegin(); it != id.projectors.rend(); ++it)
        v = apply_projector(it->observable, it->sign, v);
    return id.lhs_scale * v;
}

StateVector identity_term_state(const DecompositionIdentity& id, const IdentityTerm& t, const SecretParam& s) {
    std::vector<Factor> fs = t.factors;
    fs.push_back({{t.secret_qubit}, t.op * s.state()});
    return t.coefficient * place_factors(code(id.code).n_qubits, fs);
}

IdentityCheck check_identity(const DecompositionIdentity& id) {
    IdentityCheck r{id.id, true, {}};
    const auto secrets = test_secrets();
    for (std::size_t si = 0; si < secrets.size() && r.holds; ++si) {
        const StateVector lhs = identity_lhs(id, secrets[si]);
        StateVector rhs(lhs.num_qubits());
        for (const auto& t : id.terms) rhs += identity_term_state(id, t, secrets[si]);
        for (std::size_t i = 0; i < lhs.dim(); ++i) {
            if (lhs[i] == rhs[i]) continue;
            std::ostringstream o;
            o << "secret " << si << " basis |" << describe(lhs, i) << ">: lhs " << lhs[i].to_string() << " rhs "
              << rhs[i].to_string();
            r.holds = false;
            r.detail = o.str();
            break;
        }
    }
    return r;
}

std::vector<IdentityCheck> verify_identity(const std::string& name) {
    std::vector<IdentityCheck> out;
    auto members = identity_group(name);
    if (members.empty()) members.push_back(&find_identity(name));
    for (const auto* d : members) out.push_back(check_identity(*d));
    return out;
}

}  // namespace doily
