#include "doily/ring.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace doily {

namespace {

std::int64_t narrow(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("Amplitude: integer overflow");
    return static_cast<std::int64_t>(v);
}

GaussInt scale(GaussInt a, int shift) {
    return {narrow(static_cast<__int128>(a.re) << shift), narrow(static_cast<__int128>(a.im) << shift)};
}

bool even(GaussInt a) { return a.re % 2 == 0 && a.im % 2 == 0; }

}  // namespace

GaussInt operator+(GaussInt a, GaussInt b) {
    return {narrow(static_cast<__int128>(a.re) + b.re), narrow(static_cast<__int128>(a.im) + b.im)};
}

GaussInt operator-(GaussInt a, GaussInt b) {
    return {narrow(static_cast<__int128>(a.re) - b.re), narrow(static_cast<__int128>(a.im) - b.im)};
}

GaussInt operator*(GaussInt a, GaussInt b) {
    __int128 re = static_cast<__int128>(a.re) * b.re - static_cast<__int128>(a.im) * b.im;
    __int128 im = static_cast<__int128>(a.re) * b.im + static_cast<__int128>(a.im) * b.re;
    return {narrow(re), narrow(im)};
}

Amplitude::Amplitude(GaussInt x, GaussInt y, int k) : x_(x), y_(y), k_(k) {
    if (k < 0) {
        x_ = scale(x_, -k);
        y_ = scale(y_, -k);
        k_ = 0;
    }
    reduce();
}

void Amplitude::reduce() {
    if (is_zero()) {
        k_ = 0;
        return;
    }
    while (k_ > 0 && even(x_) && even(y_)) {
        x_ = {x_.re / 2, x_.im / 2};
        y_ = {y_.re / 2, y_.im / 2};
        --k_;
    }
}

Amplitude Amplitude::omega() { return Amplitude({}, GaussInt{1, 1}, 1); }

Amplitude Amplitude::omega_power(int k) {
    k = ((k % 8) + 8) % 8;
    Amplitude r(1);
    for (int j = 0; j < k; ++j) r *= omega();
    return r;
}

Amplitude Amplitude::conj() const {
    return Amplitude(GaussInt{x_.re, -x_.im}, GaussInt{y_.re, -y_.im}, k_);
}

Amplitude Amplitude::operator-() const {
    return Amplitude(GaussInt{-x_.re, -x_.im}, GaussInt{-y_.re, -y_.im}, k_);
}

Amplitude operator+(const Amplitude& a, const Amplitude& b) {
    const int k = std::max(a.k_, b.k_);
    GaussInt x = scale(a.x_, k - a.k_) + scale(b.x_, k - b.k_);
    GaussInt y = scale(a.y_, k - a.k_) + scale(b.y_, k - b.k_);
    return Amplitude(x, y, k);
}

Amplitude operator*(const Amplitude& a, const Amplitude& b) {
    GaussInt x = a.x_ * b.x_ + scale(a.y_ * b.y_, 1);
    GaussInt y = a.x_ * b.y_ + a.y_ * b.x_;
    return Amplitude(x, y, a.k_ + b.k_);
}

Amplitude Amplitude::inverse() const {
    if (is_zero()) throw std::domain_error("Amplitude: inverse of zero");
    // 1/(x + y sqrt2) = (x - y sqrt2) / N with N = x^2 - 2y^2, then 1/N = conj(N)/|N|^2
    GaussInt n = x_ * x_ - scale(y_ * y_, 1);
    GaussInt nc{n.re, -n.im};
    __int128 d = static_cast<__int128>(n.re) * n.re + static_cast<__int128>(n.im) * n.im;
    if (d <= 0 || (d & (d - 1)) != 0) throw std::domain_error("Amplitude: inverse leaves the ring");
    int e = 0;
    while ((static_cast<__int128>(1) << e) < d) ++e;
    Amplitude num(x_ * nc, GaussInt{-y_.re, -y_.im} * nc, 0);
    // value = num * 2^k / 2^e
    Amplitude r = num * Amplitude(GaussInt{1, 0}, {}, e);
    return r * Amplitude(GaussInt{narrow(static_cast<__int128>(1) << k_), 0}, {}, 0);
}

bool Amplitude::is_power_of_two(int* exponent) const {
    if (y_ != GaussInt{} || x_.im != 0 || x_.re <= 0) return false;
    if (!std::has_single_bit(static_cast<std::uint64_t>(x_.re))) return false;
    if (exponent) *exponent = std::countr_zero(static_cast<std::uint64_t>(x_.re)) - k_;
    return true;
}

std::complex<double> Amplitude::to_complex() const {
    const double s = std::sqrt(2.0), d = std::ldexp(1.0, -k_);
    return {(x_.re + y_.re * s) * d, (x_.im + y_.im * s) * d};
}

std::string Amplitude::dump() const {
    std::ostringstream o;
    o << x_.re << ',' << x_.im << ',' << y_.re << ',' << y_.im << ',' << k_;
    return o.str();
}

std::string Amplitude::to_string() const {
    auto gauss = [](GaussInt g) {
        std::ostringstream o;
        if (g.im == 0) {
            o << g.re;
        } else if (g.re == 0) {
            o << (g.im == 1 ? "" : g.im == -1 ? "-" : std::to_string(g.im)) << 'i';
        } else {
            o << '(' << g.re << (g.im > 0 ? "+" : "-");
            if (std::llabs(g.im) != 1) o << std::llabs(g.im);
            o << "i)";
        }
        return o.str();
    };
    std::string s;
    if (x_ != GaussInt{} || y_ == GaussInt{}) s = gauss(x_);
    if (y_ != GaussInt{}) {
        if (!s.empty()) s += '+';
        s += gauss(y_) + "*sqrt2";
    }
    if (k_ > 0) s = (x_ != GaussInt{} && y_ != GaussInt{} ? "(" + s + ")" : s) + "/" + std::to_string(1LL << k_);
    return s;
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    bool eat(std::string_view t) {
        if (s.substr(pos, t.size()) == t) {
            pos += t.size();
            return true;
        }
        return false;
    }
    bool done() const { return pos >= s.size(); }
    [[noreturn]] void fail() const { throw std::invalid_argument("cannot parse amplitude '" + std::string(s) + "'"); }

    std::int64_t integer() {
        std::int64_t v = 0;
        bool any = false;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos++] - '0');
            any = true;
            if (v > (1LL << 40)) fail();
        }
        return any ? v : -1;
    }

    // [int][*][i][*][sqrt2], at least one part
    Amplitude term() {
        Amplitude v(1);
        bool any = false;
        std::int64_t n = integer();
        if (n >= 0) {
            v = Amplitude(n);
            any = true;
        }
        eat("*");
        if (eat("i")) {
            v *= Amplitude::i();
            any = true;
        }
        eat("*");
        if (eat("sqrt2")) {
            v *= Amplitude::sqrt2();
            any = true;
        } else if (eat("sqrt8")) {
            v *= Amplitude(2) * Amplitude::sqrt2();
            any = true;
        }
        if (!any) fail();
        return v;
    }

    Amplitude sum() {
        Amplitude v(0);
        bool first = true;
        while (true) {
            int sign = 1;
            if (eat("-"))
                sign = -1;
            else if (!eat("+") && !first)
                break;
            Amplitude t = eat("(") ? paren() : term();
            v += sign > 0 ? t : -t;
            first = false;
            if (done() || s[pos] == ')' || s[pos] == '/') break;
        }
        return v;
    }

    Amplitude paren() {
        Amplitude v = sum();
        if (!eat(")")) fail();
        return v;
    }

    Amplitude expr() {
        Amplitude v = sum();
        while (eat("/")) {
            Amplitude d = eat("(") ? paren() : term();
            v *= d.inverse();
        }
        if (!done()) fail();
        return v;
    }
};

}  // namespace

Amplitude Amplitude::parse(std::string_view in) {
    std::string t;
    for (char c : in)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("empty amplitude");
    if (std::count(t.begin(), t.end(), ',') == 4) {
        std::vector<std::int64_t> v;
        std::stringstream ss(t);
        std::string part;
        while (std::getline(ss, part, ',')) {
            try {
                std::size_t used = 0;
                v.push_back(std::stoll(part, &used));
                if (used != part.size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw std::invalid_argument("cannot parse amplitude dump '" + t + "'");
            }
        }
        if (v[4] < 0) throw std::invalid_argument("negative exponent in amplitude dump");
        return Amplitude(GaussInt{v[0], v[1]}, GaussInt{v[2], v[3]}, static_cast<int>(v[4]));
    }
    Parser p{t};
    return p.expr();
}

}  // namespace doily
