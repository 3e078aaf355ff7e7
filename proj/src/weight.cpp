#include "spinorb/weight.hpp"

#include <charconv>

namespace spinorb {

const char* errc_name(Errc e) {
    switch (e) {
        case Errc::Parse: return "Parse";
        case Errc::EtaOnUnequalRanks: return "EtaOnUnequalRanks";
        case Errc::RankCapExceeded: return "RankCapExceeded";
        case Errc::NonDominant: return "NonDominant";
        case Errc::OutOfStableRange: return "OutOfStableRange";
        case Errc::SpaceMismatch: return "SpaceMismatch";
        case Errc::NotInV: return "NotInV";
        case Errc::RepresentativeFailsToCentralize: return "RepresentativeFailsToCentralize";
        case Errc::InvalidSignature: return "InvalidSignature";
        case Errc::KOutOfRange: return "KOutOfRange";
        case Errc::RegimeMismatch: return "RegimeMismatch";
        case Errc::MatchupFailure: return "MatchupFailure";
        case Errc::VariantUnavailable: return "VariantUnavailable";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "?";
}

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(d_ / 2);
    return std::to_string(d_) + "/2";
}

static std::int64_t parse_i64(std::string_view s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        throw Error(Errc::Parse, "bad integer '" + std::string(s) + "'");
    return v;
}

HalfInt HalfInt::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return from_doubled(2 * parse_i64(s));
    if (s.substr(slash + 1) != "2") throw Error(Errc::Parse, "denominator must be 2 in '" + s + "'");
    return from_doubled(parse_i64(std::string_view(s).substr(0, slash)));
}

HalfInt Weight::sum() const {
    HalfInt s;
    for (auto c : coords) s += c;
    return s;
}

bool Weight::all_integral() const {
    for (auto c : coords)
        if (!c.is_integer()) return false;
    return true;
}

bool Weight::all_strict_half() const {
    for (auto c : coords)
        if (c.is_integer()) return false;
    return true;
}

std::string Weight::str() const {
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += coords[i].str();
    }
    return s + ")";
}

Weight wD(std::initializer_list<HalfInt> c) { return Weight(Ambient::D, c); }
Weight wB(std::initializer_list<HalfInt> c) { return Weight(Ambient::B, c); }
Weight wA(std::initializer_list<HalfInt> c) { return Weight(Ambient::A, c); }

std::vector<HalfInt> parse_coords(const std::vector<std::string>& s) {
    std::vector<HalfInt> out;
    out.reserve(s.size());
    for (auto& x : s) out.push_back(HalfInt::parse(x));
    return out;
}

std::vector<std::string> coord_strings(const std::vector<HalfInt>& c) {
    std::vector<std::string> out;
    out.reserve(c.size());
    for (auto x : c) out.push_back(x.str());
    return out;
}

bool is_dominant(const Weight& w) {
    const auto& c = w.coords;
    const size_t n = c.size();
    for (size_t i = 0; i + 1 < n; ++i) {
        HalfInt next = (w.ambient == Ambient::D && i + 2 == n) ? abs(c[i + 1]) : c[i + 1];
        if (c[i] < next) return false;
    }
    if (w.ambient == Ambient::B && n > 0 && c[n - 1] < HalfInt(0)) return false;
    return true;
}

bool in_root_lattice_D(const Weight& w) {
    return w.all_integral() && w.sum().doubled() % 4 == 0;
}

std::string KType::str() const {
    std::string l = left.str(), r = right.str();
    return l.substr(0, l.size() - 1) + "|" + r.substr(1);
}

const char* parity_name(Parity p) {
    switch (p) {
        case Parity::Even: return "Even";
        case Parity::Odd: return "Odd";
        case Parity::NonIntegral: return "NonIntegral";
    }
    return "?";
}

Parity parity_of(HalfInt s) {
    if (!s.is_integer()) return Parity::NonIntegral;
    return (s.doubled() % 4 == 0) ? Parity::Even : Parity::Odd;
}

Parity parity_class(const KType& v) { return parity_of(v.left.sum() + v.right.sum()); }

OuterAut compose(OuterAut x, OuterAut y) {
    auto bits = [](OuterAut a) {
        switch (a) {
            case OuterAut::Identity: return 0;
            case OuterAut::Zeta: return 1;
            case OuterAut::Eta: return 2;
            case OuterAut::ZetaEta: return 3;
        }
        return 0;
    };
    static const OuterAut from[4] = {OuterAut::Identity, OuterAut::Zeta, OuterAut::Eta, OuterAut::ZetaEta};
    return from[bits(x) ^ bits(y)];
}

static void zeta_factor(Weight& w) {
    // Type B has no outer automorphism; the sign flip is inner there.
    if (w.ambient == Ambient::D && !w.coords.empty()) w.coords.back() = -w.coords.back();
}

KType apply_outer(OuterAut aut, const KType& v) {
    KType out = v;
    if (aut == OuterAut::Zeta || aut == OuterAut::ZetaEta) {
        zeta_factor(out.left);
        zeta_factor(out.right);
    }
    if (aut == OuterAut::Eta || aut == OuterAut::ZetaEta) {
        if (out.left.rank() != out.right.rank() || out.left.ambient != out.right.ambient)
            throw Error(Errc::EtaOnUnequalRanks, "eta needs factors of equal rank");
        std::swap(out.left, out.right);
    }
    return out;
}

}  // namespace spinorb
