#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "spinorb/error.hpp"

namespace spinorb {

// Exact element of (1/2)Z, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int n) : d_(2 * static_cast<std::int64_t>(n)) {}
    static constexpr HalfInt from_doubled(std::int64_t d) {
        HalfInt h;
        h.d_ = d;
        return h;
    }
    static constexpr HalfInt half() { return from_doubled(1); }

    constexpr std::int64_t doubled() const { return d_; }
    constexpr bool is_integer() const { return d_ % 2 == 0; }
    // Only meaningful when is_integer().
    constexpr std::int64_t to_int() const { return d_ / 2; }

    constexpr HalfInt operator-() const { return from_doubled(-d_); }
    constexpr HalfInt operator+(HalfInt o) const { return from_doubled(d_ + o.d_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_doubled(d_ - o.d_); }
    constexpr HalfInt& operator+=(HalfInt o) { d_ += o.d_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { d_ -= o.d_; return *this; }
    constexpr HalfInt operator*(std::int64_t k) const { return from_doubled(d_ * k); }
    constexpr auto operator<=>(const HalfInt&) const = default;
    constexpr bool operator==(const HalfInt&) const = default;

    std::string str() const;
    static HalfInt parse(const std::string& s);

private:
    std::int64_t d_ = 0;
};

constexpr HalfInt abs(HalfInt h) { return h < HalfInt(0) ? -h : h; }

enum class Ambient { A, B, D };

struct Weight {
    Ambient ambient = Ambient::D;
    std::vector<HalfInt> coords;

    Weight() = default;
    Weight(Ambient a, std::vector<HalfInt> c) : ambient(a), coords(std::move(c)) {}

    int rank() const { return static_cast<int>(coords.size()); }
    HalfInt sum() const;
    bool all_integral() const;
    bool all_strict_half() const;
    std::string str() const;

    auto operator<=>(const Weight&) const = default;
    bool operator==(const Weight&) const = default;
};

Weight wD(std::initializer_list<HalfInt> c);
Weight wB(std::initializer_list<HalfInt> c);
Weight wA(std::initializer_list<HalfInt> c);

// Builds coordinate lists like "3/2", "1", "-1/2".
std::vector<HalfInt> parse_coords(const std::vector<std::string>& s);
std::vector<std::string> coord_strings(const std::vector<HalfInt>& c);

bool is_dominant(const Weight& w);
bool in_root_lattice_D(const Weight& w);

// Pair of highest weights for Spin(a) x Spin(b).
struct KType {
    Weight left;
    Weight right;
    auto operator<=>(const KType&) const = default;
    bool operator==(const KType&) const = default;
    std::string str() const;
};

enum class Parity { Even, Odd, NonIntegral };
const char* parity_name(Parity p);

Parity parity_of(HalfInt s);
// Parity of the sum of all coordinates of both factors.
Parity parity_class(const KType& v);

enum class OuterAut { Identity, Zeta, Eta, ZetaEta };

OuterAut compose(OuterAut x, OuterAut y);
KType apply_outer(OuterAut aut, const KType& v);

}  // namespace spinorb
