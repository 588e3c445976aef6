#include <doctest.h>

#include <array>
#include <complex>
#include <vector>

#include "doily/pauli.hpp"
#include "doily/state.hpp"

using namespace doily;

namespace {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;

Mat single(char s) {
    const C i(0, 1);
    switch (s) {
    case 'X': return {{0, 1}, {1, 0}};
    case 'Y': return {{0, -i}, {i, 0}};
    case 'Z': return {{1, 0}, {0, -1}};
    default: return {{1, 0}, {0, 1}};
    }
}

Mat kron(const Mat& a, const Mat& b) {
    const std::size_t n = a.size(), m = b.size();
    Mat r(n * m, std::vector<C>(n * m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l) r[i * m + k][j * m + l] = a[i][j] * b[k][l];
    return r;
}

Mat mul(const Mat& a, const Mat& b) {
    Mat r(a.size(), std::vector<C>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t k = 0; k < a.size(); ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
}

// qubit 0 is the leftmost tensor factor
Mat literal(const PauliOperator& p) {
    Mat m{{1}};
    for (char s : p.symbols()) m = kron(m, single(s));
    static const std::array<C, 4> ph{C(1, 0), C(0, 1), C(-1, 0), C(0, -1)};
    for (auto& row : m)
        for (auto& x : row) x *= ph[p.phase()];
    return m;
}

bool close(const Mat& a, const Mat& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (std::abs(a[i][j] - b[i][j]) > 1e-12) return false;
    return true;
}

std::vector<PauliOperator> all_unsigned(int n) {
    std::vector<PauliOperator> v;
    for (int b = 0; b < (1 << (2 * n)); ++b) v.emplace_back(GF2Vector(n, b));
    return v;
}

}  // namespace

TEST_CASE("single-qubit encoding: I=00 X=01 Y=11 Z=10 as (q,p)") {
    const auto x = PauliOperator::parse("X"), y = PauliOperator::parse("Y"), z = PauliOperator::parse("Z");
    CHECK((!x.vec().q(0) && x.vec().p(0)));
    CHECK((y.vec().q(0) && y.vec().p(0)));
    CHECK((z.vec().q(0) && !z.vec().p(0)));
}

TEST_CASE("parse and format round-trip with phases") {
    for (const char* s : {"XYZ", "-IYYXXZZ", "iXZ", "-iYYY", "IIIII"}) CHECK(PauliOperator::parse(s).to_string() == s);
    CHECK(PauliOperator::parse("+XX").to_string() == "XX");
    CHECK_THROWS_AS(PauliOperator::parse("XQ"), ParseError);
    CHECK_THROWS_AS(PauliOperator::parse("XXXXXXXX"), ParseError);
}

TEST_CASE("multiplication agrees with literal Kronecker matrices for n <= 2") {
    for (int n = 1; n <= 2; ++n)
        for (const auto& a : all_unsigned(n))
            for (const auto& b : all_unsigned(n))
                for (int ka = 0; ka < 4; ++ka) {
                    const auto pa = a.with_phase(ka);
                    CHECK(close(literal(pa * b), mul(literal(pa), literal(b))));
                }
}

TEST_CASE("ab and ba differ by (-1)^<a,b> on all pairs of two-qubit Paulis") {
    for (const auto& a : all_unsigned(2))
        for (const auto& b : all_unsigned(2)) {
            const int w = symplectic_form(a.vec(), b.vec());
            CHECK((a * b).with_phase(((a * b).phase() + 2 * w) % 4) == b * a);
            CHECK(commutes(a, b) == (w == 0));
        }
}

TEST_CASE("multiplication is associative with exact phases") {
    const auto ops = all_unsigned(2);
    for (std::size_t i = 0; i < ops.size(); i += 3)
        for (std::size_t j = 0; j < ops.size(); j += 2)
            for (std::size_t k = 0; k < ops.size(); ++k)
                CHECK((ops[i] * ops[j]) * ops[k] == ops[i] * (ops[j] * ops[k]));
}

TEST_CASE("XY = iZ and YX = -iZ") {
    CHECK(PauliOperator::parse("X") * PauliOperator::parse("Y") == PauliOperator::parse("iZ"));
    CHECK(PauliOperator::parse("Y") * PauliOperator::parse("X") == PauliOperator::parse("-iZ"));
}

TEST_CASE("restrict keeps the chosen positions in order") {
    const std::array<int, 3> pos{2, 3, 4};
    CHECK(restrict(PauliOperator::parse("XZZXI"), pos).to_string() == "ZXI");
}

TEST_CASE("permute_qubits moves qubit i to perm[i]") {
    const std::array<int, 3> perm{2, 0, 1};
    CHECK(permute_qubits(PauliOperator::parse("-XYZ"), perm).to_string() == "-YZX");
}

TEST_CASE("Pauli action on the computational basis") {
    const StateVector zero = StateVector::basis("0"), one = StateVector::basis("1");
    CHECK(apply_pauli(PauliOperator::parse("Z"), one) == Amplitude(-1) * one);
    CHECK(apply_pauli(PauliOperator::parse("Z"), zero) == zero);
    CHECK(apply_pauli(PauliOperator::parse("Y"), one) == -Amplitude::i() * zero);
    CHECK(apply_pauli(PauliOperator::parse("Y"), zero) == Amplitude::i() * one);
    CHECK(apply_pauli(PauliOperator::parse("X"), one) == zero);
}

TEST_CASE("sign is defined only for Hermitian Paulis") {
    CHECK(PauliOperator::parse("-XX").sign() == -1);
    CHECK_THROWS(PauliOperator::parse("iXX").sign());
}
