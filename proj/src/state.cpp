#include "doily/state.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace doily {

namespace {

std::size_t bit_of(int n, int qubit) { return std::size_t{1} << (n - 1 - qubit); }

// 2^{m/2}
Amplitude pow2_half(int m) {
    Amplitude r(1);
    if (m % 2 != 0) {
        r = m > 0 ? Amplitude::sqrt2() : Amplitude::inv_sqrt2();
        m += m > 0 ? -1 : 1;
    }
    const int e = m / 2;
    return r * (e >= 0 ? Amplitude(GaussInt{std::int64_t{1} << e, 0}, {}, 0) : Amplitude(GaussInt{1, 0}, {}, -e));
}

void check_dim(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) throw DimensionError("state dimension mismatch");
}

}  // namespace

StateVector::StateVector(int n) : n_(n), amps_(std::size_t{1} << n) {
    if (n < 0 || n > kMaxQubits) throw DimensionError("StateVector: qubit count out of range");
}

StateVector::StateVector(int n, std::vector<Amplitude> amps) : StateVector(n) {
    if (amps.size() != amps_.size()) throw DimensionError("StateVector: wrong amplitude count");
    amps_ = std::move(amps);
}

StateVector StateVector::basis(int n, std::size_t index) {
    StateVector v(n);
    v.amps_.at(index) = Amplitude(1);
    return v;
}

StateVector StateVector::basis(std::string_view bits) {
    std::size_t idx = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("basis: bad bit string");
        idx = idx * 2 + (c == '1');
    }
    return basis(static_cast<int>(bits.size()), idx);
}

bool StateVector::is_zero() const {
    return std::all_of(amps_.begin(), amps_.end(), [](const Amplitude& a) { return a.is_zero(); });
}

StateVector StateVector::operator+(const StateVector& o) const {
    check_dim(*this, o);
    StateVector r(n_);
    for (std::size_t i = 0; i < dim(); ++i) r.amps_[i] = amps_[i] + o.amps_[i];
    return r;
}

StateVector StateVector::operator-(const StateVector& o) const { return *this + Amplitude(-1) * o; }

StateVector operator*(const Amplitude& a, const StateVector& v) {
    StateVector r(v.n_);
    for (std::size_t i = 0; i < v.dim(); ++i) r.amps_[i] = a * v.amps_[i];
    return r;
}

Amplitude StateVector::norm_squared() const { return inner(*this, *this); }

StateVector StateVector::normalized() const {
    int e = 0;
    if (!norm_squared().is_power_of_two(&e)) throw std::domain_error("normalized: norm^2 is not a power of two");
    return pow2_half(-e) * *this;
}

std::vector<std::pair<std::string, std::string>> StateVector::dump() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (amps_[i].is_zero()) continue;
        std::string bits;
        for (int q = 0; q < n_; ++q) bits += (i & bit_of(n_, q)) ? '1' : '0';
        out.emplace_back(bits, amps_[i].dump());
    }
    return out;
}

Amplitude inner(const StateVector& a, const StateVector& b) {
    check_dim(a, b);
    Amplitude s(0);
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i].conj() * b[i];
    return s;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    StateVector r(a.num_qubits() + b.num_qubits());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) r[i * b.dim() + j] = a[i] * b[j];
    return r;
}

StateVector place_factors(int n, const std::vector<Factor>& factors) {
    std::vector<int> order;
    StateVector joint(0, {Amplitude(1)});
    for (const auto& f : factors) {
        if (static_cast<int>(f.positions.size()) != f.state.num_qubits())
            throw DimensionError("place_factors: positions do not match factor size");
        order.insert(order.end(), f.positions.begin(), f.positions.end());
        joint = tensor(joint, f.state);
    }
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int q = 0; q < n; ++q)
        if (static_cast<int>(sorted.size()) != n || sorted[q] != q)
            throw std::invalid_argument("place_factors: positions must cover each qubit once");
    StateVector out(n);
    for (std::size_t j = 0; j < joint.dim(); ++j) {
        if (joint[j].is_zero()) continue;
        std::size_t idx = 0;
        for (int t = 0; t < n; ++t)
            if (j & bit_of(n, t)) idx |= bit_of(n, order[t]);
        out[idx] = joint[j];
    }
    return out;
}

ExactMatrix::ExactMatrix(std::size_t dim) : dim_(dim), e_(dim * dim) {}

ExactMatrix::ExactMatrix(std::size_t dim, std::vector<Amplitude> entries) : dim_(dim), e_(std::move(entries)) {
    if (e_.size() != dim * dim) throw DimensionError("ExactMatrix: wrong entry count");
}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
    ExactMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = Amplitude(1);
    return m;
}

ExactMatrix ExactMatrix::from_pauli(const PauliOperator& p) {
    const int n = p.num_qubits();
    ExactMatrix m(std::size_t{1} << n);
    for (std::size_t c = 0; c < m.dim(); ++c) {
        StateVector col = apply_pauli(p, StateVector::basis(n, c));
        for (std::size_t r = 0; r < m.dim(); ++r) m(r, c) = col[r];
    }
    return m;
}

ExactMatrix ExactMatrix::outer(const StateVector& a, const StateVector& b) {
    check_dim(a, b);
    ExactMatrix m(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) m(r, c) = a[r] * b[c].conj();
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (dim_ != o.dim_) throw DimensionError("matrix dimension mismatch");
    ExactMatrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t k = 0; k < dim_; ++k) {
            if ((*this)(r, k).is_zero()) continue;
            for (std::size_t c = 0; c < dim_; ++c) m(r, c) += (*this)(r, k) * o(k, c);
        }
    return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (dim_ != o.dim_) throw DimensionError("matrix dimension mismatch");
    ExactMatrix m(dim_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
}

ExactMatrix operator*(const Amplitude& a, const ExactMatrix& m) {
    ExactMatrix r(m.dim_);
    for (std::size_t i = 0; i < m.e_.size(); ++i) r.e_[i] = a * m.e_[i];
    return r;
}

StateVector ExactMatrix::operator*(const StateVector& v) const {
    if (v.dim() != dim_) throw DimensionError("matrix-vector dimension mismatch");
    StateVector r(v.num_qubits());
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
}

ExactMatrix ExactMatrix::adjoint() const {
    ExactMatrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) m(c, r) = (*this)(r, c).conj();
    return m;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream o;
    for (std::size_t r = 0; r < dim_; ++r) {
        o << '[';
        for (std::size_t c = 0; c < dim_; ++c) o << (c ? ", " : "") << (*this)(r, c).to_string();
        o << "]\n";
    }
    return o.str();
}

StateVector apply_pauli(const PauliOperator& p, const StateVector& v) {
    const int n = v.num_qubits();
    if (p.num_qubits() != n) throw DimensionError("apply_pauli: dimension mismatch");
    std::size_t xmask = 0, zmask = 0;
    int ys = 0;
    for (int q = 0; q < n; ++q) {
        if (p.vec().p(q)) xmask |= bit_of(n, q);
        if (p.vec().q(q)) zmask |= bit_of(n, q);
        ys += p.vec().p(q) && p.vec().q(q);
    }
    // Y = iXZ, so sigma = i^{#Y} X^x Z^z
    const Amplitude phase[4] = {Amplitude(1), Amplitude::i(), Amplitude(-1), -Amplitude::i()};
    const int k = (p.phase() + ys) % 4;
    StateVector out(n);
    for (std::size_t b = 0; b < v.dim(); ++b) {
        if (v[b].is_zero()) continue;
        const int s = (k + 2 * (std::popcount(b & zmask) & 1)) % 4;
        out[b ^ xmask] = phase[s] * v[b];
    }
    return out;
}

StateVector apply_projector(const PauliOperator& g, int sign, const StateVector& v) {
    if (!g.is_hermitian()) throw std::invalid_argument("apply_projector: g^2 != +identity");
    if (sign != 1 && sign != -1) throw std::invalid_argument("apply_projector: sign must be +-1");
    return Amplitude::half() * (v + Amplitude(sign) * apply_pauli(g, v));
}

StateVector apply_single_qubit(const ExactMatrix& m, int qubit, const StateVector& v) {
    const int n = v.num_qubits();
    if (m.dim() != 2) throw DimensionError("apply_single_qubit: need a 2x2 matrix");
    if (qubit < 0 || qubit >= n) throw std::out_of_range("apply_single_qubit: qubit out of range");
    const std::size_t bit = bit_of(n, qubit);
    StateVector out(n);
    for (std::size_t b = 0; b < v.dim(); ++b) {
        if (b & bit) continue;
        const Amplitude& a0 = v[b];
        const Amplitude& a1 = v[b | bit];
        out[b] = m(0, 0) * a0 + m(0, 1) * a1;
        out[b | bit] = m(1, 0) * a0 + m(1, 1) * a1;
    }
    return out;
}

StateVector SecretParam::state() const { return StateVector(1, {alpha, beta}); }

std::vector<SecretParam> test_secrets() {
    const Amplitude r = Amplitude::inv_sqrt2();
    return {
        {Amplitude(1), Amplitude(0)},
        {Amplitude(0), Amplitude(1)},
        {r, r},
        {r, Amplitude::i() * r},
        {Amplitude::parse("(1+i)/2"), -r},
    };
}

SecretParam parse_secret(std::string_view text) {
    std::string t(text);
    const auto commas = std::count(t.begin(), t.end(), ',');
    std::size_t cut = std::string::npos;
    if (commas == 1) {
        cut = t.find(',');
    } else if (commas == 9) {
        cut = 0;
        for (int c = 0; c < 5; ++c) cut = t.find(',', c ? cut + 1 : 0);
    }
    if (cut == std::string::npos) throw std::invalid_argument("secret must be \"alpha,beta\"");
    SecretParam s{Amplitude::parse(t.substr(0, cut)), Amplitude::parse(t.substr(cut + 1))};
    if (!s.normalized()) throw std::invalid_argument("secret is not normalized");
    return s;
}

std::pair<StateVector, StateVector> logical_states(const StabilizerCode& code) {
    const int n = code.n_qubits;
    auto project = [&](StateVector v) {
        for (const auto& g : code.generators) v = apply_projector(g, 1, v);
        return v.normalized();
    };
    StateVector zero = project(StateVector::basis(n, 0));
    StateVector one = project(StateVector::basis(n, (std::size_t{1} << n) - 1));
    return {zero, one};
}

StateVector encode_secret(const StabilizerCode& code, const SecretParam& s) {
    if (!s.normalized()) throw std::invalid_argument("encode_secret: secret not normalized");
    auto [zero, one] = logical_states(code);
    return s.alpha * zero + s.beta * one;
}

ExactMatrix reduced_density_matrix(const StateVector& v, const std::vector<int>& keep) {
    const int n = v.num_qubits();
    std::vector<bool> kept(n, false);
    for (int q : keep) {
        if (q < 0 || q >= n) throw std::out_of_range("reduced_density_matrix: bad position");
        if (kept[q]) throw std::invalid_argument("reduced_density_matrix: repeated position");
        kept[q] = true;
    }
    std::vector<int> env;
    for (int q = 0; q < n; ++q)
        if (!kept[q]) env.push_back(q);
    const int k = static_cast<int>(keep.size());
    auto index = [&](std::size_t a, std::size_t e) {
        std::size_t idx = 0;
        for (int t = 0; t < k; ++t)
            if ((a >> (k - 1 - t)) & 1U) idx |= bit_of(n, keep[t]);
        const int m = static_cast<int>(env.size());
        for (int t = 0; t < m; ++t)
            if ((e >> (m - 1 - t)) & 1U) idx |= bit_of(n, env[t]);
        return idx;
    };
    ExactMatrix rho(std::size_t{1} << k);
    const std::size_t envdim = std::size_t{1} << env.size();
    for (std::size_t a = 0; a < rho.dim(); ++a)
        for (std::size_t b = 0; b < rho.dim(); ++b) {
            Amplitude s(0);
            for (std::size_t e = 0; e < envdim; ++e) {
                const auto& x = v[index(a, e)];
                const auto& y = v[index(b, e)];
                if (!x.is_zero() && !y.is_zero()) s += x * y.conj();
            }
            rho(a, b) = s;
        }
    return rho;
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) return false;
    for (int k = 0; k < 8; ++k)
        if (a == Amplitude::omega_power(k) * b) return true;
    return false;
}

StateVector bell_phi(std::string_view s) {
    const Amplitude r = Amplitude::inv_sqrt2();
    if (s == "++") return StateVector(2, {r, 0, 0, r});
    if (s == "+-") return StateVector(2, {0, r, r, 0});
    if (s == "-+") return StateVector(2, {r, 0, 0, -r});
    if (s == "--") return StateVector(2, {0, r, -r, 0});
    throw std::invalid_argument("bell_phi: unknown label");
}

StateVector bell_chi(std::string_view s) {
    const Amplitude h = Amplitude::half(), i = Amplitude::i();
    if (s == "++") return StateVector(2, {h, h, -i * h, i * h});
    if (s == "+-") return StateVector(2, {h, -h, i * h, i * h});
    if (s == "-+") return StateVector(2, {h, h, i * h, -i * h});
    if (s == "--") return StateVector(2, {h, -h, -i * h, -i * h});
    throw std::invalid_argument("bell_chi: unknown label");
}

const StandardBases& standard_bases() {
    static const StandardBases b = [] {
        StandardBases s;
        const Amplitude r = Amplitude::inv_sqrt2(), i = Amplitude::i();
        const char* labels[4] = {"++", "+-", "-+", "--"};
        for (const char* l : labels) {
            s.phi.push_back({std::string("phi") + l, bell_phi(l)});
            s.chi.push_back({std::string("chi") + l, bell_chi(l)});
        }
        s.single = {
            {"0", StateVector(1, {1, 0})},  {"1", StateVector(1, {0, 1})},
            {"0~", StateVector(1, {r, i * r})}, {"1~", StateVector(1, {r, -i * r})},
            {"0^", StateVector(1, {r, r})},  {"1^", StateVector(1, {r, -r})},
        };
        for (const char* l : labels)
            for (int bit = 0; bit < 2; ++bit) {
                const std::string tag = std::string(l) + char('0' + bit);
                s.Phi.push_back({"Phi" + tag, tensor(bell_phi(l), s.single[bit].state)});
                s.Sigma.push_back({"Sigma" + tag, tensor(bell_phi(l), s.single[2 + bit].state)});
                s.Omega.push_back({"Omega" + tag, tensor(bell_phi(l), s.single[4 + bit].state)});
            }
        return s;
    }();
    return b;
}

const SpecialUnitaries& special_unitaries() {
    static const SpecialUnitaries u = [] {
        const Amplitude r = Amplitude::inv_sqrt2(), i = Amplitude::i();
        SpecialUnitaries s;
        s.U = ExactMatrix(2, {r, r, i * r, -i * r});
        s.R = Amplitude::omega() * s.U;
        s.swap = ExactMatrix(4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
        return s;
    }();
    return u;
}

std::vector<std::vector<PauliOperator>> confi_lift() {
    return {
        parse_list({"ZZ", "IZ", "ZI"}),  parse_list({"IY", "-YI", "-YY"}), parse_list({"XX", "IX", "XI"}),
        parse_list({"XY", "-ZX", "YZ"}), parse_list({"ZY", "-XZ", "YX"}),
    };
}

MubReport spread_mub_check(const std::vector<std::vector<PauliOperator>>& lines) {
    std::vector<std::uint16_t> seen;
    for (const auto& l : lines) {
        if (l.size() != 3) throw std::invalid_argument("spread_mub_check: lines need 3 points");
        for (const auto& p : l) {
            if (p.num_qubits() != 2) throw std::invalid_argument("spread_mub_check: two-qubit labels expected");
            seen.push_back(p.vec().bits());
        }
        if (context_sign(l) < 0) throw std::invalid_argument("spread_mub_check: sign lift gives -identity");
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("spread_mub_check: lines are not disjoint");
    if (lines.size() > 5 || (lines.size() == 5 && seen.size() != 15))
        throw std::invalid_argument("spread_mub_check: lines do not form a spread");

    MubReport rep;
    rep.ok = true;
    const Amplitude quarter(GaussInt{1, 0}, {}, 2);
    for (const auto& l : lines) {
        std::vector<StateVector> basis;
        for (int s1 : {1, -1})
            for (int s2 : {1, -1}) {
                StateVector v;
                for (std::size_t c = 0; c < 4; ++c) {
                    v = apply_projector(l[1], s2, apply_projector(l[0], s1, StateVector::basis(2, c)));
                    if (!v.is_zero()) break;
                }
                v = v.normalized();
                if (apply_pauli(l[0], v) != Amplitude(s1) * v || apply_pauli(l[1], v) != Amplitude(s2) * v ||
                    apply_pauli(l[2], v) != Amplitude(s1 * s2) * v) {
                    rep.ok = false;
                    rep.detail = "eigenvector check failed for line " + l[0].to_string();
                }
                basis.push_back(v);
            }
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b)
                if (inner(basis[a], basis[b]) != Amplitude(a == b ? 1 : 0)) {
                    rep.ok = false;
                    rep.detail = "basis not orthonormal for line " + l[0].to_string();
                }
        rep.bases.push_back(basis);
    }
    for (std::size_t x = 0; x < rep.bases.size(); ++x)
        for (std::size_t y = x + 1; y < rep.bases.size(); ++y)
            for (const auto& e : rep.bases[x])
                for (const auto& f : rep.bases[y])
                    if (inner(e, f).abs2() != quarter) {
                        rep.ok = false;
                        rep.detail = "bases " + std::to_string(x) + " and " + std::to_string(y) + " are not unbiased";
                    }
    return rep;
}

}  // namespace doily
