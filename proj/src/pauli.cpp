#include "doily/pauli.hpp"

#include <bit>

namespace doily {

namespace {

int pc(unsigned x) { return std::popcount(x); }

}  // namespace

PauliOperator::PauliOperator(GF2Vector v, int phase) : vec_(v), phase_(((phase % 4) + 4) % 4) {}

char PauliOperator::symbol(int qubit) const {
    static constexpr char table[4] = {'I', 'Z', 'X', 'Y'};  // index q + 2p
    return table[vec_.q(qubit) + 2 * vec_.p(qubit)];
}

std::string PauliOperator::symbols() const {
    std::string s;
    for (int i = 0; i < num_qubits(); ++i) s += symbol(i);
    return s;
}

std::string PauliOperator::to_string() const {
    static constexpr const char* prefix[4] = {"", "i", "-", "-i"};
    return prefix[phase_] + symbols();
}

int PauliOperator::sign() const {
    if (!is_hermitian()) throw std::logic_error("sign of non-Hermitian Pauli " + to_string());
    return phase_ == 0 ? 1 : -1;
}

PauliOperator PauliOperator::parse(std::string_view s) {
    int k = 0;
    if (s.starts_with("-i")) {
        k = 3;
        s.remove_prefix(2);
    } else if (s.starts_with("-")) {
        k = 2;
        s.remove_prefix(1);
    } else if (s.starts_with("+")) {
        s.remove_prefix(1);
    } else if (s.starts_with("i")) {
        k = 1;
        s.remove_prefix(1);
    }
    const int n = static_cast<int>(s.size());
    if (n > kMaxQubits) throw ParseError("too many qubits in Pauli string");
    std::uint8_t q = 0, p = 0;
    for (int j = 0; j < n; ++j) {
        switch (s[j]) {
        case 'I': break;
        case 'X': p |= 1U << j; break;
        case 'Y': p |= 1U << j; q |= 1U << j; break;
        case 'Z': q |= 1U << j; break;
        default: throw ParseError(std::string("illegal Pauli symbol '") + s[j] + "'");
        }
    }
    return PauliOperator(GF2Vector::from_qp(n, q, p), k);
}

PauliOperator encode_symbol_string(std::string_view s) { return PauliOperator::parse(s); }
std::string format_string(const PauliOperator& p) { return p.to_string(); }

// Per qubit X^p Z^q = i^{-pq} sigma(q,p); commuting Z^q1 past X^p2 gives (-1)^{q1 p2}.
PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
    if (a.num_qubits() != b.num_qubits()) throw DimensionError("multiply: qubit count mismatch");
    const unsigned q1 = a.vec().q_mask(), p1 = a.vec().p_mask();
    const unsigned q2 = b.vec().q_mask(), p2 = b.vec().p_mask();
    const unsigned q = q1 ^ q2, p = p1 ^ p2;
    int k = a.phase() + b.phase() + pc(q1 & p1) + pc(q2 & p2) + 2 * pc(q1 & p2) - pc(q & p);
    return PauliOperator(a.vec() + b.vec(), k);
}

PauliOperator product(std::span<const PauliOperator> ops) {
    if (ops.empty()) return PauliOperator::identity(0);
    PauliOperator r = PauliOperator::identity(ops.front().num_qubits());
    for (const auto& o : ops) r = r * o;
    return r;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
    return symplectic_form(a.vec(), b.vec()) == 0;
}

PauliOperator restrict(const PauliOperator& a, std::span<const int> positions) {
    const int n = a.num_qubits();
    const int m = static_cast<int>(positions.size());
    std::uint8_t q = 0, p = 0;
    std::uint8_t seen = 0;
    for (int j = 0; j < m; ++j) {
        int pos = positions[j];
        if (pos < 0 || pos >= n) throw std::out_of_range("restrict: position out of range");
        if ((seen >> pos) & 1U) throw std::invalid_argument("restrict: repeated position");
        seen |= 1U << pos;
        if (a.vec().q(pos)) q |= 1U << j;
        if (a.vec().p(pos)) p |= 1U << j;
    }
    return PauliOperator(GF2Vector::from_qp(m, q, p));
}

PauliOperator permute_qubits(const PauliOperator& a, std::span<const int> perm) {
    const int n = a.num_qubits();
    if (static_cast<int>(perm.size()) != n) throw DimensionError("permute_qubits: wrong permutation size");
    std::uint8_t q = 0, p = 0, seen = 0;
    for (int i = 0; i < n; ++i) {
        int t = perm[i];
        if (t < 0 || t >= n || ((seen >> t) & 1U)) throw std::invalid_argument("permute_qubits: not a permutation");
        seen |= 1U << t;
        if (a.vec().q(i)) q |= 1U << t;
        if (a.vec().p(i)) p |= 1U << t;
    }
    return PauliOperator(GF2Vector::from_qp(n, q, p), a.phase());
}

std::vector<PauliOperator> parse_list(std::initializer_list<std::string_view> items) {
    std::vector<PauliOperator> out;
    for (auto s : items) out.push_back(PauliOperator::parse(s));
    return out;
}

}  // namespace doily
