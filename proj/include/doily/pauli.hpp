#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "doily/gf2.hpp"

namespace doily {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// i^phase times the tensor product encoded by vec; (q,p): I=00 X=01 Y=11 Z=10
class PauliOperator {
public:
    PauliOperator() = default;
    explicit PauliOperator(GF2Vector v, int phase = 0);

    static PauliOperator identity(int n) { return PauliOperator(GF2Vector(n, 0)); }
    static PauliOperator parse(std::string_view s);

    const GF2Vector& vec() const { return vec_; }
    int phase() const { return phase_; }
    int num_qubits() const { return vec_.num_qubits(); }
    char symbol(int qubit) const;
    std::string symbols() const;
    std::string to_string() const;

    bool is_identity() const { return vec_.is_zero() && phase_ == 0; }
    bool is_hermitian() const { return phase_ % 2 == 0; }
    // +1 or -1; throws for phases +-i
    int sign() const;
    PauliOperator with_phase(int k) const { return PauliOperator(vec_, k); }
    PauliOperator unsigned_part() const { return PauliOperator(vec_, 0); }
    PauliOperator operator-() const { return PauliOperator(vec_, phase_ + 2); }

    friend bool operator==(const PauliOperator&, const PauliOperator&) = default;
    friend auto operator<=>(const PauliOperator&, const PauliOperator&) = default;

private:
    GF2Vector vec_;
    int phase_ = 0;
};

PauliOperator encode_symbol_string(std::string_view s);
std::string format_string(const PauliOperator& p);

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);
inline PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) { return multiply(a, b); }
PauliOperator product(std::span<const PauliOperator> ops);

bool commutes(const PauliOperator& a, const PauliOperator& b);

PauliOperator restrict(const PauliOperator& a, std::span<const int> positions);

// qubit i of a lands on qubit perm[i]
PauliOperator permute_qubits(const PauliOperator& a, std::span<const int> perm);

std::vector<PauliOperator> parse_list(std::initializer_list<std::string_view> items);

}  // namespace doily
