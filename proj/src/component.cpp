#include "spinorb/component.hpp"

#include <set>

#include "spinorb/orbit.hpp"
#include "spinorb/realization.hpp"

namespace spinorb {

namespace {

struct Ctx {
    const Realization& r;
    CliffordG x;
    int nf;
};

CliffordG unit_pin(const CliffordSpace& sp, const UnitVec& u) {
    CliffordG v = to_clifford(sp, u.u);
    return u.q > 0 ? v : v.scaled(Gauss::I());
}

CliffordG flatten(const SpinTuple& t) {
    CliffordG p = t.parts[0];
    for (std::size_t i = 1; i < t.parts.size(); ++i) p = p * t.parts[i];
    return p;
}

SpinTuple identity(const Ctx& c) {
    return SpinTuple{std::vector<CliffordG>(c.nf, CliffordG::one(c.r.space))};
}

SpinTuple inverse(const SpinTuple& t) {
    SpinTuple r = t;
    for (auto& p : r.parts) p = p.star();
    return r;
}

bool in_spin(const SpinTuple& t) {
    for (const auto& p : t.parts) {
        if (!p.is_even()) return false;
        if (!(p * p.star() == CliffordG::one(p.space()))) return false;
    }
    return true;
}

RepresentativeCheck check_rep(const Ctx& c, const std::string& name, const SpinTuple& t) {
    RepresentativeCheck rc;
    rc.name = name;
    CliffordG g = flatten(t);
    rc.element = t.str();
    rc.centralizes = g * c.x == c.x * g;
    rc.in_spin = in_spin(t);
    if (!rc.centralizes || !rc.in_spin)
        throw Error(Errc::RepresentativeFailsToCentralize, name + " does not centralize e in Spin: " + rc.element);
    return rc;
}

std::set<std::string> keys(const std::vector<SpinTuple>& g) {
    std::set<std::string> s;
    for (const auto& x : g) s.insert(x.key());
    return s;
}

}  // namespace

ComponentReport verify_component_reps(const SignedDiagram& d) {
    ComponentReport rep;
    rep.diagram = d;
    rep.table = component_group(d);
    Realization R = realize(d);
    if (!R.supports_components)
        throw Error(Errc::InvalidArgument, "repeated odd rows of length at least 3 are not supported");
    const CliffordSpace& sp = R.space;
    Ctx c{R, x_element(R), R.complex ? 1 : 2};
    CliffordG one = CliffordG::one(sp), neg = CliffordG::scalar(sp, Gauss(-1));

    std::vector<std::pair<std::string, SpinTuple>> cands;
    if (R.complex) {
        cands.push_back({"-1", SpinTuple{{neg}}});
        std::vector<int> all;
        for (int j = 0; j < sp.pairs; ++j) all.push_back(j);
        if (R.dims[0] % 2 == 0) cands.push_back({"E", SpinTuple{{build_E_even(sp, all)}}});
    } else {
        cands.push_back({"(-1,1)", SpinTuple{{neg, one}}});
        cands.push_back({"(1,-1)", SpinTuple{{one, neg}}});
    }

    // Per odd row: the element acting by -1 on its span, split by factor.
    struct RowElt {
        SpinTuple t;
        int parity[2];
    };
    std::vector<RowElt> rows;
    for (const auto& o : R.odd_rows) {
        RowElt e{identity(c), {0, 0}};
        for (int f = 0; f < 2; ++f) {
            int slot = R.complex ? 0 : f;
            for (int P : o.pairs[f]) e.t.parts[slot] = e.t.parts[slot] * minus_on_pair(sp, P);
            for (const auto& u : o.units[f]) {
                e.t.parts[slot] = e.t.parts[slot] * unit_pin(sp, u);
                e.parity[slot] ^= 1;
            }
        }
        rows.push_back(e);
    }
    int m = static_cast<int>(rows.size());
    if (m > 16) throw Error(Errc::InvalidArgument, "too many odd rows");
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        int par[2] = {0, 0};
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) {
                par[0] ^= rows[i].parity[0];
                par[1] ^= rows[i].parity[1];
            }
        if (par[0] || par[1]) continue;
        SpinTuple t = identity(c);
        std::string name;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) {
                t = t * rows[i].t;
                name += (name.empty() ? "E[" : " ") + R.odd_rows[i].name;
            }
        cands.push_back({name + "]", t});
    }

    // Paths and their endpoints.
    std::vector<SpinTuple> ngens;
    CliffordT xt = to_trig(c.x);
    for (const auto& p : R.paths) {
        std::vector<CliffordT> parts(c.nf, CliffordT::one(sp));
        if (p.plane) {
            int slot = R.complex ? 0 : p.factor;
            CliffordG uw = unit_pin(sp, p.u) * unit_pin(sp, p.w);
            parts[slot] = CliffordT::scalar(sp, Trig::c()) + to_trig(uw).scaled(Trig::s());
        } else {
            for (auto [P, sigma] : p.torus) {
                int slot = R.complex ? 0 : R.factor_of_generator(2 * P);
                CliffordT ef = to_trig(one - CliffordG::gen(sp, sp.e(P)) * CliffordG::gen(sp, sp.f(P)));
                CliffordT fac = CliffordT::scalar(sp, Trig::c()) + ef.scaled(Trig::s() * Trig(Gauss::I()) * Trig(sigma));
                parts[slot] = parts[slot] * fac;
            }
        }
        CliffordT prod = parts[0];
        for (int i = 1; i < c.nf; ++i) prod = prod * parts[i];
        PathCheck pc;
        pc.name = p.name;
        pc.centralizes = prod * xt == xt * prod;
        if (!pc.centralizes) throw Error(Errc::RepresentativeFailsToCentralize, "path " + p.name + " leaves the centralizer");
        SpinTuple at_pi, at_2pi;
        for (int i = 0; i < c.nf; ++i) {
            at_pi.parts.push_back(eval_trig(parts[i], Gauss(0), Gauss(1)));
            at_2pi.parts.push_back(eval_trig(parts[i], Gauss(-1), Gauss(0)));
        }
        pc.at_pi = at_pi.str();
        pc.at_two_pi = at_2pi.str();
        if (!in_spin(at_pi) || !in_spin(at_2pi))
            throw Error(Errc::RepresentativeFailsToCentralize, "path " + p.name + " endpoint outside Spin");
        ngens.push_back(at_pi);
        ngens.push_back(at_2pi);
        rep.paths.push_back(pc);
    }
    if (ngens.empty()) ngens.push_back(identity(c));
    std::vector<SpinTuple> ngroup = generate_group(ngens);
    std::set<std::string> nkeys = keys(ngroup);

    // S: grow only with candidates not already present.
    std::vector<SpinTuple> sgens = ngens;
    std::vector<SpinTuple> sgroup = ngroup;
    std::set<std::string> skeys = nkeys;
    for (const auto& [name, t] : cands) {
        rep.representatives.push_back(check_rep(c, name, t));
        if (skeys.count(t.key())) continue;
        sgens.push_back(t);
        sgroup = generate_group(sgens);
        skeys = keys(sgroup);
    }
    rep.order_s = sgroup.size();
    rep.order_n = ngroup.size();
    rep.relations.push_back("|S| = " + std::to_string(rep.order_s));
    rep.relations.push_back("|N| = " + std::to_string(rep.order_n));

    // N is normal here since every generator of S normalizes the path set.
    bool normal = true, abelian = true, squares = true;
    for (const auto& s : sgens)
        for (const auto& n : ngens)
            normal = normal && nkeys.count((s * n * inverse(s)).key());
    for (const auto& a : sgens)
        for (const auto& b : sgens)
            abelian = abelian && nkeys.count((a * b * inverse(a) * inverse(b)).key());
    for (const auto& s : sgroup) squares = squares && nkeys.count((s * s).key());
    rep.relations.push_back(std::string("N normal in S: ") + (normal ? "yes" : "no"));
    rep.relations.push_back(std::string("S/N abelian: ") + (abelian ? "yes" : "no"));
    rep.relations.push_back(std::string("squares in N: ") + (squares ? "yes" : "no"));

    std::size_t q = rep.order_s / rep.order_n;
    if (!normal || !abelian || rep.order_s % rep.order_n) rep.computed = GroupTag::Other;
    else if (q == 1) rep.computed = GroupTag::Trivial;
    else if (q == 2) rep.computed = GroupTag::Z2;
    else if (q == 4) rep.computed = squares ? GroupTag::Z2xZ2 : GroupTag::Z4;
    else if (q == 8 && squares) rep.computed = GroupTag::Z2xZ2xZ2;
    else rep.computed = GroupTag::Other;
    return rep;
}

}  // namespace spinorb
