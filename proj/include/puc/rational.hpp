#pragma once

#include <string>

#include "puc/errors.hpp"
#include "puc/special.hpp"

namespace puc {

/// Exact rational over 128-bit integers, always normalized (gcd 1,
/// positive denominator).  Used for combinatorial identities that must
/// hold exactly, not merely to rounding error.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(i128 num, i128 den) : num_(num), den_(den) { normalize(); }
    // NOLINTNEXTLINE(google-explicit-constructor): integers are rationals.
    Rational(long long n) : num_(n), den_(1) {}

    [[nodiscard]] i128 num() const { return num_; }
    [[nodiscard]] i128 den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw NumericError("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return !(a == b);
    }

    [[nodiscard]] double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    [[nodiscard]] std::string to_string() const {
        if (den_ == 1) return i128_to_string(num_);
        return i128_to_string(num_) + "/" + i128_to_string(den_);
    }

private:
    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            const i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void normalize() {
        if (den_ == 0) throw NumericError("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const i128 g = gcd128(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    i128 num_;
    i128 den_;
};

}  // namespace puc
