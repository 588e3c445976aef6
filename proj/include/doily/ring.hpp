#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace doily {

struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    friend bool operator==(const GaussInt&, const GaussInt&) = default;
};

GaussInt operator+(GaussInt a, GaussInt b);
GaussInt operator-(GaussInt a, GaussInt b);
GaussInt operator*(GaussInt a, GaussInt b);

// (x + y*sqrt2) / 2^k, kept fully reduced
class Amplitude {
public:
    Amplitude() = default;
    Amplitude(std::int64_t v) : x_{v, 0} {}  // NOLINT(google-explicit-constructor)
    Amplitude(GaussInt x, GaussInt y, int k);

    static Amplitude i() { return Amplitude(GaussInt{0, 1}, {}, 0); }
    static Amplitude sqrt2() { return Amplitude({}, GaussInt{1, 0}, 0); }
    static Amplitude inv_sqrt2() { return Amplitude({}, GaussInt{1, 0}, 1); }
    static Amplitude half() { return Amplitude(GaussInt{1, 0}, {}, 1); }
    static Amplitude omega();  // e^{i pi/4}
    static Amplitude omega_power(int k);

    const GaussInt& x() const { return x_; }
    const GaussInt& y() const { return y_; }
    int k() const { return k_; }
    bool is_zero() const { return x_ == GaussInt{} && y_ == GaussInt{}; }

    Amplitude conj() const;
    Amplitude abs2() const { return *this * conj(); }
    Amplitude operator-() const;
    Amplitude& operator+=(const Amplitude& o) { return *this = *this + o; }
    Amplitude& operator*=(const Amplitude& o) { return *this = *this * o; }

    friend Amplitude operator+(const Amplitude& a, const Amplitude& b);
    friend Amplitude operator-(const Amplitude& a, const Amplitude& b) { return a + (-b); }
    friend Amplitude operator*(const Amplitude& a, const Amplitude& b);
    friend bool operator==(const Amplitude&, const Amplitude&) = default;

    // exact inverse when the value is a unit of the form 2^j times a phase e^{i pi m/4}, or sqrt2 powers
    Amplitude inverse() const;

    // true for a nonnegative rational 2^e (e may be negative); stores e
    bool is_power_of_two(int* exponent) const;

    std::complex<double> to_complex() const;
    // "x_re,x_im,y_re,y_im,k"
    std::string dump() const;
    std::string to_string() const;

    // "1", "-i", "1/sqrt2", "i/sqrt2", "1/2", "(1+i)/2", "sqrt2/2", or a dump string
    static Amplitude parse(std::string_view s);

private:
    void reduce();

    GaussInt x_;
    GaussInt y_;
    int k_ = 0;
};

}  // namespace doily
