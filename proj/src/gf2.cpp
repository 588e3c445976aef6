#include "doily/gf2.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace doily {

namespace {

void check_same(const GF2Vector& u, const GF2Vector& v) {
    if (u.num_qubits() != v.num_qubits())
        throw DimensionError("GF2Vector dimension mismatch: " + std::to_string(u.num_qubits()) +
                             " vs " + std::to_string(v.num_qubits()));
}

int lowest_bit(std::uint16_t x) { return std::countr_zero(x); }

}  // namespace

GF2Vector::GF2Vector(int n, std::uint16_t bits) : n_(n), bits_(bits) {
    if (n < 0 || n > kMaxQubits) throw DimensionError("qubit count out of range: " + std::to_string(n));
    if (n < 8 && (bits >> (2 * n)) != 0) throw DimensionError("bits exceed 2n");
}

GF2Vector GF2Vector::from_qp(int n, std::uint8_t q, std::uint8_t p) {
    return GF2Vector(n, static_cast<std::uint16_t>(q | (p << n)));
}

std::uint8_t GF2Vector::q_mask() const { return static_cast<std::uint8_t>(bits_ & ((1U << n_) - 1)); }
std::uint8_t GF2Vector::p_mask() const { return static_cast<std::uint8_t>(bits_ >> n_); }

GF2Vector GF2Vector::operator+(const GF2Vector& o) const {
    check_same(*this, o);
    return GF2Vector(n_, static_cast<std::uint16_t>(bits_ ^ o.bits_));
}

GF2Vector& GF2Vector::operator+=(const GF2Vector& o) { return *this = *this + o; }

std::string GF2Vector::to_string() const {
    std::string s;
    for (int i = 0; i < 2 * n_; ++i) s += ((bits_ >> i) & 1U) ? '1' : '0';
    return s;
}

int symplectic_form(const GF2Vector& u, const GF2Vector& v) {
    check_same(u, v);
    unsigned x = (u.q_mask() & v.p_mask()) ^ (v.q_mask() & u.p_mask());
    return std::popcount(x) & 1;
}

int quadratic_form(const GF2Vector& v) { return std::popcount(unsigned(v.q_mask() & v.p_mask())) & 1; }

GF2Vector transvection(const GF2Vector& w, const GF2Vector& v) {
    return symplectic_form(v, w) ? v + w : v;
}

bool Subspace::contains(const GF2Vector& v) const {
    if (v.num_qubits() != n_) return false;
    if (v.is_zero()) return true;
    return std::binary_search(points_.begin(), points_.end(), v);
}

Subspace span(int n, std::span<const GF2Vector> gens) {
    std::vector<std::uint16_t> rows;
    for (const auto& g : gens) {
        if (g.num_qubits() != n) throw DimensionError("span: mixed qubit counts");
        rows.push_back(g.bits());
    }
    // Gauss-Jordan with pivot at the lowest set coordinate
    std::vector<std::uint16_t> basis;
    for (auto r : rows) {
        for (auto b : basis)
            if ((r >> lowest_bit(b)) & 1U) r ^= b;
        if (!r) continue;
        int piv = lowest_bit(r);
        for (auto& b : basis)
            if ((b >> piv) & 1U) b ^= r;
        basis.push_back(r);
    }
    std::sort(basis.begin(), basis.end(), [](auto a, auto b) { return lowest_bit(a) < lowest_bit(b); });

    Subspace s;
    s.n_ = n;
    for (auto b : basis) s.generators_.emplace_back(n, b);
    const std::size_t k = basis.size();
    for (std::uint32_t m = 1; m < (1U << k); ++m) {
        std::uint16_t x = 0;
        for (std::size_t j = 0; j < k; ++j)
            if ((m >> j) & 1U) x ^= basis[j];
        s.points_.emplace_back(n, x);
    }
    std::sort(s.points_.begin(), s.points_.end());
    return s;
}

Subspace span(std::span<const GF2Vector> gens) {
    if (gens.empty()) return Subspace{};
    return span(gens.front().num_qubits(), gens);
}

bool is_totally_isotropic(const Subspace& s) {
    const auto& g = s.generators();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (symplectic_form(g[i], g[j])) return false;
    return true;
}

int gf2_rank(std::span<const GF2Vector> vs) { return span(vs).rank(); }

std::vector<Subspace> enumerate_subspaces(int n, int rank, SubspaceFilter filter) {
    const int d = 2 * n;
    if (n < 1 || n > kMaxQubits) throw DomainError("enumerate_subspaces: n out of range");
    if (rank < 1 || rank > d) throw DomainError("enumerate_subspaces: rank out of range");
    if (filter == SubspaceFilter::totally_isotropic && rank > n)
        throw DomainError("enumerate_subspaces: isotropic rank exceeds n");

    std::vector<Subspace> out;
    std::vector<int> pivots(rank);
    std::vector<GF2Vector> rows(rank);

    // rows[i] has its pivot bit set, zeros below the pivot and at later pivots
    std::function<void(int)> fill_row = [&](int i) {
        if (i == rank) {
            out.push_back(span(n, rows));
            return;
        }
        std::vector<int> free;
        for (int j = pivots[i] + 1; j < d; ++j)
            if (std::find(pivots.begin() + i + 1, pivots.end(), j) == pivots.end()) free.push_back(j);
        for (std::uint32_t m = 0; m < (1U << free.size()); ++m) {
            std::uint16_t r = static_cast<std::uint16_t>(1U << pivots[i]);
            for (std::size_t t = 0; t < free.size(); ++t)
                if ((m >> t) & 1U) r |= static_cast<std::uint16_t>(1U << free[t]);
            rows[i] = GF2Vector(n, r);
            bool ok = true;
            if (filter == SubspaceFilter::totally_isotropic)
                for (int t = 0; t < i && ok; ++t) ok = symplectic_form(rows[t], rows[i]) == 0;
            if (ok) fill_row(i + 1);
        }
    };
    std::function<void(int, int)> choose = [&](int i, int start) {
        if (i == rank) {
            fill_row(0);
            return;
        }
        for (int c = start; c <= d - (rank - i); ++c) {
            pivots[i] = c;
            choose(i + 1, c + 1);
        }
    };
    choose(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace doily
