#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "doily/codes.hpp"
#include "doily/pauli.hpp"
#include "doily/ring.hpp"

namespace doily {

// Basis index: qubit 0 is the most significant bit.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(int n);
    StateVector(int n, std::vector<Amplitude> amps);

    static StateVector basis(int n, std::size_t index);
    static StateVector basis(std::string_view bits);  // "01101"

    int num_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    const Amplitude& operator[](std::size_t i) const { return amps_[i]; }
    Amplitude& operator[](std::size_t i) { return amps_[i]; }
    const std::vector<Amplitude>& amplitudes() const { return amps_; }
    bool is_zero() const;

    StateVector operator+(const StateVector& o) const;
    StateVector operator-(const StateVector& o) const;
    StateVector& operator+=(const StateVector& o) { return *this = *this + o; }
    friend StateVector operator*(const Amplitude& a, const StateVector& v);
    friend bool operator==(const StateVector&, const StateVector&) = default;

    Amplitude norm_squared() const;
    // norm^2 must be a power of two
    StateVector normalized() const;

    // nonzero entries as (bitstring, amplitude dump)
    std::vector<std::pair<std::string, std::string>> dump() const;

private:
    int n_ = 0;
    std::vector<Amplitude> amps_;
};

// <a|b>, antilinear in a
Amplitude inner(const StateVector& a, const StateVector& b);
StateVector tensor(const StateVector& a, const StateVector& b);

struct Factor {
    std::vector<int> positions;  // qubit receiving each factor qubit, in factor order
    StateVector state;
};

// Tensor factors written in party order, placed on the given qubits.
StateVector place_factors(int n, const std::vector<Factor>& factors);

class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(std::size_t dim);
    ExactMatrix(std::size_t dim, std::vector<Amplitude> entries);

    static ExactMatrix identity(std::size_t dim);
    static ExactMatrix from_pauli(const PauliOperator& p);
    static ExactMatrix outer(const StateVector& a, const StateVector& b);  // |a><b|

    std::size_t dim() const { return dim_; }
    const Amplitude& operator()(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }
    Amplitude& operator()(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    friend ExactMatrix operator*(const Amplitude& a, const ExactMatrix& m);
    StateVector operator*(const StateVector& v) const;
    ExactMatrix adjoint() const;
    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t dim_ = 0;
    std::vector<Amplitude> e_;
};

StateVector apply_pauli(const PauliOperator& p, const StateVector& v);
// (1 + sign*g)/2 v
StateVector apply_projector(const PauliOperator& g, int sign, const StateVector& v);
// 2x2 matrix on one qubit
StateVector apply_single_qubit(const ExactMatrix& m, int qubit, const StateVector& v);

struct SecretParam {
    Amplitude alpha;
    Amplitude beta;

    bool normalized() const { return alpha.abs2() + beta.abs2() == Amplitude(1); }
    StateVector state() const;
};

// fixed exact test secrets
std::vector<SecretParam> test_secrets();
SecretParam parse_secret(std::string_view text);

std::pair<StateVector, StateVector> logical_states(const StabilizerCode& code);
StateVector encode_secret(const StabilizerCode& code, const SecretParam& s);

ExactMatrix reduced_density_matrix(const StateVector& v, const std::vector<int>& keep);

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b);

struct NamedState {
    std::string name;
    StateVector state;
};

struct StandardBases {
    std::vector<NamedState> phi;     // phi++ phi+- phi-+ phi--
    std::vector<NamedState> chi;     // chi++ chi+- chi-+ chi--
    std::vector<NamedState> single;  // 0 1 0~ 1~ 0^ 1^
    std::vector<NamedState> Phi;     // phi x |b>
    std::vector<NamedState> Sigma;   // phi x |b~>
    std::vector<NamedState> Omega;   // phi x |b^>
};

const StandardBases& standard_bases();
// "++" etc.
StateVector bell_phi(std::string_view signs);
StateVector bell_chi(std::string_view signs);

struct SpecialUnitaries {
    ExactMatrix U;
    ExactMatrix R;
    ExactMatrix swap;
};

const SpecialUnitaries& special_unitaries();

struct MubReport {
    bool ok = false;
    std::vector<std::vector<StateVector>> bases;
    std::string detail;
};

// signed triples, each with product +identity
MubReport spread_mub_check(const std::vector<std::vector<PauliOperator>>& lines);
std::vector<std::vector<PauliOperator>> confi_lift();

}  // namespace doily
