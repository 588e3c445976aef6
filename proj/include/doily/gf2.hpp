#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace doily {

inline constexpr int kMaxQubits = 7;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Layout: bit i holds q_i, bit n+i holds p_i. Qubit 0 is the leftmost symbol.
class GF2Vector {
public:
    GF2Vector() = default;
    GF2Vector(int n, std::uint16_t bits);

    static GF2Vector from_qp(int n, std::uint8_t q, std::uint8_t p);

    int num_qubits() const { return n_; }
    std::uint16_t bits() const { return bits_; }
    std::uint8_t q_mask() const;
    std::uint8_t p_mask() const;
    bool q(int i) const { return (bits_ >> i) & 1U; }
    bool p(int i) const { return (bits_ >> (n_ + i)) & 1U; }
    bool is_zero() const { return bits_ == 0; }

    GF2Vector operator+(const GF2Vector& o) const;
    GF2Vector& operator+=(const GF2Vector& o);

    // q block then p block, e.g. XYZ -> "011110"
    std::string to_string() const;

    friend bool operator==(const GF2Vector&, const GF2Vector&) = default;
    friend auto operator<=>(const GF2Vector& a, const GF2Vector& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    int n_ = 0;
    std::uint16_t bits_ = 0;
};

int symplectic_form(const GF2Vector& u, const GF2Vector& v);
int quadratic_form(const GF2Vector& v);
GF2Vector transvection(const GF2Vector& w, const GF2Vector& v);

class Subspace {
public:
    Subspace() = default;

    int num_qubits() const { return n_; }
    int rank() const { return static_cast<int>(generators_.size()); }
    // reduced row echelon rows, pivot = lowest set coordinate
    const std::vector<GF2Vector>& generators() const { return generators_; }
    // nonzero points sorted by bit value
    const std::vector<GF2Vector>& points() const { return points_; }
    bool contains(const GF2Vector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.generators_ == b.generators_;
    }
    friend bool operator<(const Subspace& a, const Subspace& b) {
        return a.points_ < b.points_;
    }

    friend Subspace span(int n, std::span<const GF2Vector> gens);

private:
    int n_ = 0;
    std::vector<GF2Vector> generators_;
    std::vector<GF2Vector> points_;
};

Subspace span(int n, std::span<const GF2Vector> gens);
Subspace span(std::span<const GF2Vector> gens);  // n taken from gens[0]

bool is_totally_isotropic(const Subspace& s);

// Rank over GF(2) of an arbitrary vector list.
int gf2_rank(std::span<const GF2Vector> vs);

enum class SubspaceFilter { all, totally_isotropic };

std::vector<Subspace> enumerate_subspaces(int n, int rank, SubspaceFilter filter);

}  // namespace doily
