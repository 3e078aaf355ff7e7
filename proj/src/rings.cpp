#include "spinorb/rings.hpp"

namespace spinorb {

Gauss Gauss::i_pow(std::int64_t k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return Gauss(1);
        case 1: return I();
        case 2: return Gauss(-1);
        default: return -I();
    }
}

std::string Gauss::str() const {
    if (im.is_zero()) return re.str();
    std::string imag = im == Rational(1) ? "i" : im == Rational(-1) ? "-i" : im.str() + "i";
    if (re.is_zero()) return imag;
    return re.str() + (im > Rational(0) ? "+" : "") + imag;
}

void Trig::add(std::pair<int, int> k, const Gauss& g) {
    if (g.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, g);
        return;
    }
    it->second += g;
    if (it->second.is_zero()) terms_.erase(it);
}

Trig Trig::operator-() const {
    Trig t;
    for (const auto& [k, g] : terms_) t.terms_.emplace(k, -g);
    return t;
}

Trig Trig::operator+(const Trig& o) const {
    Trig t = *this;
    for (const auto& [k, g] : o.terms_) t.add(k, g);
    return t;
}

Trig Trig::operator*(const Trig& o) const {
    Trig t;
    for (const auto& [k1, g1] : terms_) {
        for (const auto& [k2, g2] : o.terms_) {
            int cd = k1.first + k2.first;
            int sd = k1.second + k2.second;
            Gauss g = g1 * g2;
            if (sd == 2) {  // s^2 = 1 - c^2
                t.add({cd, 0}, g);
                t.add({cd + 2, 0}, -g);
            } else {
                t.add({cd, sd}, g);
            }
        }
    }
    return t;
}

Gauss Trig::eval(const Gauss& cv, const Gauss& sv) const {
    Gauss total;
    for (const auto& [k, g] : terms_) {
        Gauss m = g;
        for (int i = 0; i < k.first; ++i) m *= cv;
        if (k.second) m *= sv;
        total += m;
    }
    return total;
}

std::string Trig::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, g] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + g.str() + ")";
        if (k.first) out += "c^" + std::to_string(k.first);
        if (k.second) out += "s";
    }
    return out;
}

}  // namespace spinorb
