#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "spinorb/error.hpp"

namespace spinorb {

// Exact rational with overflow-checked int64 parts.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const { return Rational(checked_neg(num_), den_); }
    Rational operator+(const Rational& o) const {
        return Rational(add(mul(num_, o.den_), mul(o.num_, den_)), mul(den_, o.den_));
    }
    Rational operator-(const Rational& o) const { return *this + (-o); }
    Rational operator*(const Rational& o) const { return Rational(mul(num_, o.num_), mul(den_, o.den_)); }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw Error(Errc::InvalidArgument, "division by zero");
        return Rational(mul(num_, o.den_), mul(den_, o.num_));
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    bool operator==(const Rational& o) const = default;
    std::strong_ordering operator<=>(const Rational& o) const {
        return static_cast<__int128>(num_) * o.den_ <=> static_cast<__int128>(o.num_) * den_;
    }

    std::string str() const { return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_); }

private:
    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::InvalidArgument, "rational overflow");
        return r;
    }
    static std::int64_t add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::InvalidArgument, "rational overflow");
        return r;
    }
    static std::int64_t checked_neg(std::int64_t a) { return mul(a, -1); }
    void normalize() {
        if (den_ == 0) throw Error(Errc::InvalidArgument, "zero denominator");
        if (den_ < 0) {
            num_ = checked_neg(num_);
            den_ = checked_neg(den_);
        }
        std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace spinorb
