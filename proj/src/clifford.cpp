#include "spinorb/clifford.hpp"

#include <set>

namespace spinorb {

CliffordT to_trig(const CliffordG& x) {
    CliffordT r(x.space());
    for (const auto& [m, c] : x.terms()) r.add(m, Trig(c));
    return r;
}

CliffordG eval_trig(const CliffordT& x, const Gauss& c, const Gauss& s) {
    CliffordG r(x.space());
    for (const auto& [m, t] : x.terms()) r.add(m, t.eval(c, s));
    return r;
}

Gauss quad(const CliffordG& x, const CliffordG& y) {
    if (!x.is_vector() || !y.is_vector()) throw Error(Errc::NotInV, "quad expects vectors");
    // xy + yx = 2Q(x, y).
    CliffordG s = x * y + y * x;
    Gauss total;
    for (const auto& [m, c] : s.terms()) {
        if (m != 0) throw Error(Errc::NotInV, "anticommutator is not scalar");
        total = c;
    }
    return total * Gauss(Rational(1, 2));
}

CliffordG rho_action(const CliffordG& x, const CliffordG& v) {
    CliffordG r = x.alpha() * v * x.star();
    if (!r.is_vector()) throw Error(Errc::NotInV, "conjugate leaves V: element is not in Pin(V)");
    return r;
}

CliffordG minus_on_pair(CliffordSpace sp, int j) {
    CliffordG one = CliffordG::one(sp);
    CliffordG ef = CliffordG::gen(sp, sp.e(j)) * CliffordG::gen(sp, sp.f(j));
    return (one - ef).scaled(Gauss::I());
}

CliffordG build_E_even(CliffordSpace sp, const std::vector<int>& pairs) {
    CliffordG x = CliffordG::one(sp);
    for (int j : pairs) x = x * minus_on_pair(sp, j);
    return x;
}

CliffordG build_E_odd(CliffordSpace sp, int single, const std::vector<int>& pairs) {
    return CliffordG::gen(sp, sp.v(single)) * build_E_even(sp, pairs);
}

const char* group_tag_name(GroupTag t) {
    switch (t) {
        case GroupTag::Trivial: return "1";
        case GroupTag::Z2: return "Z2";
        case GroupTag::Z4: return "Z4";
        case GroupTag::Z2xZ2: return "Z2xZ2";
        case GroupTag::Z2xZ4: return "Z2xZ4";
        case GroupTag::Z2xZ2xZ2: return "Z2xZ2xZ2";
        case GroupTag::Other: return "other";
    }
    return "?";
}

GroupTag parse_group_tag(const std::string& s) {
    for (GroupTag t : {GroupTag::Trivial, GroupTag::Z2, GroupTag::Z4, GroupTag::Z2xZ2, GroupTag::Z2xZ4,
                       GroupTag::Z2xZ2xZ2, GroupTag::Other})
        if (s == group_tag_name(t)) return t;
    throw Error(Errc::Parse, "unknown group tag " + s);
}

SpinTuple SpinTuple::operator*(const SpinTuple& o) const {
    if (parts.size() != o.parts.size()) throw Error(Errc::SpaceMismatch, "tuple arity differs");
    SpinTuple r;
    for (std::size_t i = 0; i < parts.size(); ++i) r.parts.push_back(parts[i] * o.parts[i]);
    return r;
}

std::string SpinTuple::key() const {
    std::string k;
    for (const auto& p : parts) {
        for (const auto& [m, c] : p.terms())
            k += std::to_string(m) + ":" + c.re.str() + "," + c.im.str() + ";";
        k += "|";
    }
    return k;
}

std::string SpinTuple::str() const {
    if (parts.size() == 1) return parts[0].str();
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i].str();
    return s + ")";
}

static SpinTuple identity_like(const SpinTuple& g) {
    SpinTuple e;
    for (const auto& p : g.parts) e.parts.push_back(CliffordG::one(p.space()));
    return e;
}

std::vector<SpinTuple> generate_group(const std::vector<SpinTuple>& gens, std::size_t limit) {
    if (gens.empty()) throw Error(Errc::InvalidArgument, "need at least one generator");
    std::vector<SpinTuple> elems{identity_like(gens[0])};
    std::set<std::string> seen{elems[0].key()};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : gens) {
            SpinTuple h = elems[i] * g;
            if (seen.insert(h.key()).second) {
                elems.push_back(std::move(h));
                if (elems.size() > limit) throw Error(Errc::InvalidArgument, "group exceeds size limit");
            }
        }
    }
    return elems;
}

static int element_order(const SpinTuple& g) {
    SpinTuple id = identity_like(g);
    SpinTuple x = g;
    for (int k = 1; k <= 64; ++k) {
        if (x == id) return k;
        x = x * g;
    }
    throw Error(Errc::InvalidArgument, "element of large order");
}

GroupTag tag_abelian(const std::vector<SpinTuple>& elems) {
    for (const auto& x : elems)
        for (const auto& y : elems)
            if (!(x * y == y * x)) return GroupTag::Other;
    int maxo = 1;
    for (const auto& x : elems) maxo = std::max(maxo, element_order(x));
    switch (elems.size()) {
        case 1: return GroupTag::Trivial;
        case 2: return GroupTag::Z2;
        case 4: return maxo == 4 ? GroupTag::Z4 : GroupTag::Z2xZ2;
        case 8: return maxo == 2 ? GroupTag::Z2xZ2xZ2 : maxo == 4 ? GroupTag::Z2xZ4 : GroupTag::Other;
        default: return GroupTag::Other;
    }
}

CenterDescriptor center_spin(int n) {
    if (n < 1) throw Error(Errc::InvalidArgument, "n must be positive");
    CliffordSpace sp{n, 0};
    std::vector<int> all;
    for (int j = 0; j < n; ++j) all.push_back(j);
    CenterDescriptor d;
    d.generators.push_back(SpinTuple{{CliffordG::scalar(sp, Gauss(-1))}});
    d.generators.push_back(SpinTuple{{build_E_even(sp, all)}});
    d.elements = generate_group(d.generators);
    d.iso = tag_abelian(d.elements);
    return d;
}

// Combined space for Spin(c) x Spin(d): V+ pairs, V- pairs, then v+ and v-.
static CliffordSpace pair_space(int c, int d) { return CliffordSpace{c / 2 + d / 2, c % 2 + d % 2}; }

CenterDescriptor center_spin_pair(int c, int d) {
    if (c < 1 || d < 1 || (c + d) % 2) throw Error(Errc::InvalidSignature, "signature must have even sum");
    CliffordSpace sp = pair_space(c, d);
    int p = c / 2, q = d / 2;
    CliffordG one = CliffordG::one(sp), neg = CliffordG::scalar(sp, Gauss(-1));
    CenterDescriptor desc;
    desc.generators.push_back(SpinTuple{{neg, one}});
    desc.generators.push_back(SpinTuple{{one, neg}});
    if (c % 2 == 0) {
        std::vector<int> left, right;
        for (int j = 0; j < p; ++j) left.push_back(j);
        for (int j = 0; j < q; ++j) right.push_back(p + j);
        desc.generators.push_back(SpinTuple{{build_E_even(sp, left), build_E_even(sp, right)}});
    }
    desc.elements = generate_group(desc.generators);
    desc.iso = tag_abelian(desc.elements);
    return desc;
}

const char* genuineness_name(Genuineness g) {
    switch (g) {
        case Genuineness::FactorsSO: return "FactorsSO";
        case Genuineness::FactorsSpin: return "FactorsSpin";
        case Genuineness::Genuine: return "Genuine";
    }
    return "?";
}

Genuineness genuineness(const KType& mu) {
    auto cls = [](const Weight& w) {
        if (w.coords.empty()) return 0;
        if (w.all_integral()) return 1;
        if (w.all_strict_half()) return 2;
        throw Error(Errc::InvalidArgument, "mixed integrality inside one factor");
    };
    int l = cls(mu.left), r = cls(mu.right);
    if (l == 0) l = r;
    if (r == 0) r = l;
    if (l == 1 && r == 1) return Genuineness::FactorsSO;
    if (l == 2 && r == 2) return Genuineness::FactorsSpin;
    return Genuineness::Genuine;
}

std::string CentralElement::str() const {
    std::string a = eps1 < 0 ? "-" : "", b = eps2 < 0 ? "-" : "";
    if (e_type) return "(" + a + "E+, " + b + "E-)";
    return "(" + a + "I, " + b + "I)";
}

static std::int64_t doubled_first(const Weight& w) { return w.coords.empty() ? 0 : w.coords[0].doubled(); }

int central_character_closed(const KType& mu, const CentralElement& z) {
    // eps^{2a_1} with 2a_1 an integer; -1 contributes i^2.
    std::int64_t k = 0;
    if (z.eps1 < 0) k += 2 * doubled_first(mu.left);
    if (z.eps2 < 0) k += 2 * doubled_first(mu.right);
    if (z.e_type) k += (mu.left.sum() + mu.right.sum()).doubled();
    return static_cast<int>(((k % 4) + 4) % 4);
}

int central_character_clifford(const KType& mu, const CentralElement& z, int c, int d) {
    int p = c / 2, q = d / 2;
    if (p < 1 || q < 1) throw Error(Errc::InvalidArgument, "each factor needs a hyperbolic pair");
    if (z.e_type && (c % 2 || d % 2)) throw Error(Errc::InvalidArgument, "E-type center needs even factors");
    if (mu.left.rank() != p || mu.right.rank() != q) throw Error(Errc::InvalidArgument, "rank mismatch");
    CliffordSpace sp = pair_space(c, d);
    // theta_j = m_j * pi on pair j.
    std::vector<int> m(p + q, z.e_type ? 1 : 0);
    if (z.eps1 < 0) m[0] += 2;
    if (z.eps2 < 0) m[p] += 2;
    auto factor = [&](int j) {
        // cos(m pi/2) + i sin(m pi/2) (1 - e f)
        static const int cs[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        const int* t = cs[m[j] % 4];
        CliffordG one = CliffordG::one(sp);
        CliffordG ef = CliffordG::gen(sp, sp.e(j)) * CliffordG::gen(sp, sp.f(j));
        return one.scaled(Gauss(t[0])) + (one - ef).scaled(Gauss::I() * Gauss(t[1]));
    };
    CliffordG left = CliffordG::one(sp), right = CliffordG::one(sp);
    for (int j = 0; j < p; ++j) left = left * factor(j);
    for (int j = 0; j < q; ++j) right = right * factor(p + j);
    // The explicit central element.
    CliffordG zl = CliffordG::scalar(sp, Gauss(z.eps1)), zr = CliffordG::scalar(sp, Gauss(z.eps2));
    if (z.e_type) {
        std::vector<int> lp, rp;
        for (int j = 0; j < p; ++j) lp.push_back(j);
        for (int j = 0; j < q; ++j) rp.push_back(p + j);
        zl = build_E_even(sp, lp).scaled(Gauss(z.eps1));
        zr = build_E_even(sp, rp).scaled(Gauss(z.eps2));
    }
    if (!(left == zl) || !(right == zr))
        throw Error(Errc::InvalidArgument, "torus element does not reach " + z.str());
    std::int64_t k = 0;
    for (int j = 0; j < p; ++j) k += m[j] * mu.left.coords[j].doubled();
    for (int j = 0; j < q; ++j) k += m[p + j] * mu.right.coords[j].doubled();
    return static_cast<int>(((k % 4) + 4) % 4);
}

std::vector<KType> genuine_char_reps(int c, int d) {
    int p = c / 2, q = d / 2;
    Ambient al = c % 2 ? Ambient::B : Ambient::D, ar = d % 2 ? Ambient::B : Ambient::D;
    auto fill = [](int n, HalfInt x) { return std::vector<HalfInt>(n, x); };
    HalfInt h = HalfInt::half();
    std::vector<KType> out;
    out.push_back({Weight(al, fill(p, h)), Weight(ar, fill(q, 0))});
    out.push_back({Weight(al, fill(p, 0)), Weight(ar, fill(q, h))});
    if (c % 2 == 0) {
        auto l = fill(p, h);
        l.back() = -h;
        auto r = fill(q, h);
        r.back() = -h;
        out.push_back({Weight(al, l), Weight(ar, fill(q, 0))});
        out.push_back({Weight(al, fill(p, 0)), Weight(ar, r)});
    }
    return out;
}

int genuine_char_index(const KType& mu, int c, int d) {
    auto reps = genuine_char_reps(c, d);
    for (std::size_t j = 0; j < reps.size(); ++j) {
        std::vector<HalfInt> diff;
        for (int i = 0; i < mu.left.rank(); ++i) diff.push_back(mu.left.coords[i] - reps[j].left.coords[i]);
        for (int i = 0; i < mu.right.rank(); ++i) diff.push_back(mu.right.coords[i] - reps[j].right.coords[i]);
        if (in_root_lattice_D(Weight(Ambient::D, diff))) return static_cast<int>(j) + 1;
    }
    return 0;
}

}  // namespace spinorb
