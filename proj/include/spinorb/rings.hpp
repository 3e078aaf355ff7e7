#pragma once

#include <map>
#include <string>
#include <utility>

#include "spinorb/rational.hpp"

namespace spinorb {

// Gaussian rationals Q(i).
struct Gauss {
    Rational re, im;

    Gauss() = default;
    Gauss(Rational r, Rational i = Rational(0)) : re(r), im(i) {}
    Gauss(std::int64_t r) : re(r) {}
    static Gauss I() { return Gauss(Rational(0), Rational(1)); }
    // i^k for any integer k.
    static Gauss i_pow(std::int64_t k);

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    Gauss operator-() const { return {-re, -im}; }
    Gauss operator+(const Gauss& o) const { return {re + o.re, im + o.im}; }
    Gauss operator-(const Gauss& o) const { return {re - o.re, im - o.im}; }
    Gauss operator*(const Gauss& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    Gauss& operator+=(const Gauss& o) { return *this = *this + o; }
    Gauss& operator*=(const Gauss& o) { return *this = *this * o; }
    bool operator==(const Gauss& o) const = default;
    auto operator<=>(const Gauss& o) const = default;
    std::string str() const;
};

// Q(i)[c, s] / (c^2 + s^2 - 1): keys are (deg c, deg s) with deg s in {0, 1}.
class Trig {
public:
    Trig() = default;
    Trig(Gauss g) { add({0, 0}, g); }
    Trig(std::int64_t n) : Trig(Gauss(n)) {}
    static Trig c() { Trig t; t.add({1, 0}, Gauss(1)); return t; }
    static Trig s() { Trig t; t.add({0, 1}, Gauss(1)); return t; }

    bool is_zero() const { return terms_.empty(); }
    Trig operator-() const;
    Trig operator+(const Trig& o) const;
    Trig operator-(const Trig& o) const { return *this + (-o); }
    Trig operator*(const Trig& o) const;
    Trig& operator+=(const Trig& o) { return *this = *this + o; }
    bool operator==(const Trig& o) const = default;
    auto operator<=>(const Trig& o) const = default;

    // Substitute numeric (c, s); caller guarantees c^2 + s^2 = 1.
    Gauss eval(const Gauss& cv, const Gauss& sv) const;
    std::string str() const;

private:
    void add(std::pair<int, int> k, const Gauss& g);
    std::map<std::pair<int, int>, Gauss> terms_;
};

}  // namespace spinorb
