#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spinorb/rings.hpp"
#include "spinorb/weight.hpp"

namespace spinorb {

// Quadratic space with hyperbolic pairs (e_j, f_j), Q(e_j, f_j) = 1, followed by
// orthonormal singletons v_t, Q(v_t, v_t) = 1. Generator 2j is e_j, 2j+1 is f_j,
// singletons occupy the highest indices.
struct CliffordSpace {
    int pairs = 0;
    int singles = 0;

    int generators() const { return 2 * pairs + singles; }
    int e(int j) const { return 2 * j; }
    int f(int j) const { return 2 * j + 1; }
    int v(int t) const { return 2 * pairs + t; }
    bool is_single(int g) const { return g >= 2 * pairs; }
    // Generator with nonzero pairing against g (itself for singletons).
    int partner(int g) const { return is_single(g) ? g : (g ^ 1); }
    bool operator==(const CliffordSpace&) const = default;
};

inline constexpr int kMaxGenerators = 32;

template <class R>
class Clifford {
public:
    using Mask = std::uint32_t;

    Clifford() = default;
    explicit Clifford(CliffordSpace sp) : space_(sp) { check_space(); }

    static Clifford scalar(CliffordSpace sp, const R& c) {
        Clifford x(sp);
        x.add(0, c);
        return x;
    }
    static Clifford one(CliffordSpace sp) { return scalar(sp, R(1)); }
    static Clifford gen(CliffordSpace sp, int g, const R& c = R(1)) {
        Clifford x(sp);
        x.add(Mask(1) << g, c);
        return x;
    }

    const CliffordSpace& space() const { return space_; }
    const std::map<Mask, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(Mask m, const R& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    Clifford operator+(const Clifford& o) const {
        same(o);
        Clifford r = *this;
        for (const auto& [m, c] : o.terms_) r.add(m, c);
        return r;
    }
    Clifford operator-() const {
        Clifford r(space_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    Clifford operator-(const Clifford& o) const { return *this + (-o); }
    Clifford& operator+=(const Clifford& o) { return *this = *this + o; }
    Clifford scaled(const R& k) const {
        Clifford r(space_);
        for (const auto& [m, c] : terms_) r.add(m, c * k);
        return r;
    }

    Clifford operator*(const Clifford& o) const {
        same(o);
        Clifford r(space_);
        for (const auto& [m1, c1] : terms_) {
            for (const auto& [m2, c2] : o.terms_) {
                std::map<Mask, std::int64_t> prod = mono_mul(m1, m2);
                R c = c1 * c2;
                for (const auto& [m, k] : prod) r.add(m, c * R(k));
            }
        }
        return r;
    }

    // Parity automorphism: (-1)^degree on each monomial.
    Clifford alpha() const {
        Clifford r(space_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, std::popcount(m) % 2 ? -c : c);
        return r;
    }

    // Linear anti-involution reversing each monomial, x1...xr -> xr...x1.
    Clifford star() const {
        Clifford r(space_);
        for (const auto& [m, c] : terms_) {
            std::map<Mask, std::int64_t> acc{{0, 1}};
            for (int g = kMaxGenerators - 1; g >= 0; --g) {
                if (!(m >> g & 1)) continue;
                std::map<Mask, std::int64_t> next;
                for (const auto& [am, ak] : acc)
                    for (const auto& [bm, bk] : right_gen(am, g)) next[bm] += ak * bk;
                acc.clear();
                for (const auto& [bm, bk] : next)
                    if (bk) acc.emplace(bm, bk);
            }
            for (const auto& [am, ak] : acc) r.add(am, c * R(ak));
        }
        return r;
    }

    // True when every term has degree 1.
    bool is_vector() const {
        for (const auto& [m, c] : terms_)
            if (std::popcount(m) != 1) return false;
        return true;
    }
    bool is_even() const {
        for (const auto& [m, c] : terms_)
            if (std::popcount(m) % 2) return false;
        return true;
    }

    bool operator==(const Clifford& o) const { return space_ == o.space_ && terms_ == o.terms_; }

    // Canonical text form, e.g. "i*1 + -i*e1f1".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")";
            out += m == 0 ? std::string("1") : mono_name(m);
        }
        return out;
    }

    std::string mono_name(Mask m) const {
        std::string s;
        for (int g = 0; g < space_.generators(); ++g) {
            if (!(m >> g & 1)) continue;
            if (space_.is_single(g)) s += "v" + std::to_string(g - 2 * space_.pairs + 1);
            else s += (g % 2 ? "f" : "e") + std::to_string(g / 2 + 1);
        }
        return s;
    }

private:
    void check_space() const {
        if (space_.generators() > kMaxGenerators) throw Error(Errc::InvalidArgument, "too many Clifford generators");
    }
    void same(const Clifford& o) const {
        if (!(space_ == o.space_)) throw Error(Errc::SpaceMismatch, "Clifford elements over different spaces");
    }

    // Monomial m times generator g, reduced to normal form.
    std::map<Mask, std::int64_t> right_gen(Mask m, int g) const {
        std::map<Mask, std::int64_t> out;
        int p = space_.partner(g);
        Mask above = g + 1 >= 32 ? 0 : (m >> (g + 1)) << (g + 1);
        int t = std::popcount(above);
        if (p > g && (m >> p & 1)) {
            Mask abovep = p + 1 >= 32 ? 0 : (m >> (p + 1)) << (p + 1);
            std::int64_t sgn = std::popcount(abovep) % 2 ? -1 : 1;
            out[m & ~(Mask(1) << p)] += 2 * sgn;
        }
        std::int64_t sgn = t % 2 ? -1 : 1;
        if (m >> g & 1) {
            if (space_.is_single(g)) out[m & ~(Mask(1) << g)] += sgn;
        } else {
            out[m | (Mask(1) << g)] += sgn;
        }
        return out;
    }

    std::map<Mask, std::int64_t> mono_mul(Mask a, Mask b) const {
        std::map<Mask, std::int64_t> acc{{a, 1}};
        for (int g = 0; g < kMaxGenerators; ++g) {
            if (!(b >> g & 1)) continue;
            std::map<Mask, std::int64_t> next;
            for (const auto& [am, ak] : acc)
                for (const auto& [bm, bk] : right_gen(am, g)) next[bm] += ak * bk;
            acc.clear();
            for (const auto& [bm, bk] : next)
                if (bk) acc.emplace(bm, bk);
        }
        return acc;
    }

    CliffordSpace space_;
    std::map<Mask, R> terms_;
};

using CliffordG = Clifford<Gauss>;
using CliffordT = Clifford<Trig>;

CliffordT to_trig(const CliffordG& x);
CliffordG eval_trig(const CliffordT& x, const Gauss& c, const Gauss& s);

// Q(x, y) for vectors.
Gauss quad(const CliffordG& x, const CliffordG& y);

// rho(x) v = alpha(x) v x^*; throws NotInV when the result leaves V.
CliffordG rho_action(const CliffordG& x, const CliffordG& v);

// i(1 - e_j f_j): acts by -1 on span(e_j, f_j).
CliffordG minus_on_pair(CliffordSpace sp, int j);
// E_{2n} = i^n prod (1 - e_j f_j) over the given pairs.
CliffordG build_E_even(CliffordSpace sp, const std::vector<int>& pairs);
// E_{2k+1} = i^k v prod (1 - e_j f_j).
CliffordG build_E_odd(CliffordSpace sp, int single, const std::vector<int>& pairs);

// Group descriptor tags shared by centers and component groups.
enum class GroupTag { Trivial, Z2, Z4, Z2xZ2, Z2xZ4, Z2xZ2xZ2, Other };
const char* group_tag_name(GroupTag t);
GroupTag parse_group_tag(const std::string& s);

// Element of Spin(V+) x Spin(V-) (or one factor), both stored in one algebra.
struct SpinTuple {
    std::vector<CliffordG> parts;
    bool operator==(const SpinTuple&) const = default;
    SpinTuple operator*(const SpinTuple& o) const;
    std::string key() const;
    std::string str() const;
};

// Finite group generated by the given elements, listed in discovery order.
std::vector<SpinTuple> generate_group(const std::vector<SpinTuple>& gens, std::size_t limit = 4096);
// Tags an abelian group from its order and the orders of its elements.
GroupTag tag_abelian(const std::vector<SpinTuple>& elems);

struct CenterDescriptor {
    std::vector<SpinTuple> generators;
    std::vector<SpinTuple> elements;
    GroupTag iso = GroupTag::Trivial;
};

// Center of Spin(2n, C).
CenterDescriptor center_spin(int n);
// Center of the double cover of Spin(c, d), inside Spin(c) x Spin(d).
CenterDescriptor center_spin_pair(int c, int d);

enum class Genuineness { FactorsSO, FactorsSpin, Genuine };
const char* genuineness_name(Genuineness g);
Genuineness genuineness(const KType& mu);

// A central element of Spin(c) x Spin(d) described by signs and whether it is the
// E-type element (i^p prod(1 - e f), i^q prod(1 - e f)).
struct CentralElement {
    int eps1 = 1;
    int eps2 = 1;
    bool e_type = false;
    std::string str() const;
};

// Closed form; the value is a fourth root of unity returned as i^k, k in 0..3.
int central_character_closed(const KType& mu, const CentralElement& z);
// Torus exponential at multiples of pi, checked against the explicit central
// element; throws InvalidArgument if the torus element differs from z.
int central_character_clifford(const KType& mu, const CentralElement& z, int c, int d);

// The four K-types of the genuine central characters (Lemma list), for (2p|2q) or (2p+1|2q+1).
std::vector<KType> genuine_char_reps(int c, int d);
// Index j (1-based) of the genuine central character of mu, 0 if none.
int genuine_char_index(const KType& mu, int c, int d);

}  // namespace spinorb
