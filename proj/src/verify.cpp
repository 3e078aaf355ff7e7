#include "spinorb/verify.hpp"

#include <chrono>
#include <algorithm>
#include <functional>
#include <set>

#include "spinorb/clifford.hpp"
#include "spinorb/component.hpp"
#include "spinorb/count.hpp"
#include "spinorb/orbit.hpp"
#include "spinorb/spectra.hpp"
#include "spinorb/weyl.hpp"

namespace spinorb {

std::vector<KType> ktype_window(int a, int b, int bound) {
    auto side = [&](int n) {
        std::vector<Weight> out;
        const int m = n / 2;
        for (int cls = 0; cls < 2; ++cls) {
            std::vector<HalfInt> cur;
            std::function<void()> rec = [&] {
                if (static_cast<int>(cur.size()) == m) {
                    Weight w(n % 2 ? Ambient::B : Ambient::D, cur);
                    if (is_dominant(w)) out.push_back(w);
                    return;
                }
                for (int d = bound; d >= -bound; --d) {
                    if ((d & 1) != cls) continue;
                    HalfInt x = HalfInt::from_doubled(d);
                    if (!cur.empty() && cur.back() < x) continue;
                    cur.push_back(x);
                    rec();
                    cur.pop_back();
                }
            };
            rec();
            if (m == 0) break;  // one empty weight, not two
        }
        return out;
    };
    std::vector<KType> out;
    for (auto& l : side(a))
        for (auto& r : side(b)) out.push_back({l, r});
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Ctx {
    CriterionResult& res;
    int failures = 0;
    // Keeps the report short: the first few failures carry detail.
    void fail(const std::string& why) {
        ++failures;
        if (failures <= 8) res.details.push_back(why);
    }
    void expect(bool ok, const std::string& why) {
        ++res.checked;
        if (!ok) fail(why);
    }
};

std::string sig(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

void counts(Ctx& c) {
    for (int n = 4; n <= 8; ++n)
        for (int k = 1; 2 * k <= n - 2; ++k)
            for (auto [a, b] : admissible_groups(n, k))
                for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
                    if (x == y && x != a) continue;
                    auto u = count_signature(x, y, n, k);
                    c.expect(u.n_total == u.theorem, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " " +
                                                         sig(x, y) + " case " + std::to_string(u.case_id) +
                                                         ": computed " + std::to_string(u.n_total) + ", table " +
                                                         std::to_string(u.theorem));
                }
}

void example_k1(Ctx& c) {
    using S = std::set<CartanClass>;
    auto got = [](int a, int b, int n) {
        auto u = count_signature(a, b, n, 1);
        return S(u.survivors.begin(), u.survivors.end());
    };
    auto H = [](int rp, int rm, int m, int s, Numeral x = Numeral::None) { return CartanClass{rp, rm, m, s, x}; };
    c.expect(got(4, 4, 4) == S{H(2, 2, 0, 0), H(1, 1, 0, 2), H(0, 0, 2, 0, Numeral::I), H(0, 0, 2, 0, Numeral::II)},
             "Spin(4,4)");
    for (int n = 4; n <= 8; ++n) {
        const std::string tag = " at n=" + std::to_string(n);
        if (2 * n - 4 > 4)
            c.expect(got(2 * n - 4, 4, n) == S{H(n - 2, 2, 0, 0), H(n - 3, 1, 0, 2), H(n - 4, 0, 2, 0)},
                     "Spin(2n-4,4)" + tag);
        c.expect(got(2 * n - 3, 3, n) == S{H(n - 2, 1, 0, 1)}, "Spin(2n-3,3)" + tag);
        if (n >= 5) c.expect(got(2 * n - 5, 5, n) == S{H(n - 3, 2, 0, 1), H(n - 5, 0, 2, 1)}, "Spin(2n-5,5)" + tag);
    }
}

void matchup(Ctx& c) {
    const int k = 1, bound = 12;
    for (auto [a, b] : {std::pair{4, 4}, {6, 4}, {5, 5}, {5, 3}, {7, 3}, {7, 5}}) {
        const int n = (a + b) / 2;
        const int cid = case_for_signature(a, b, n, k);
        int r = 0;
        for (int t = 0; t <= 4; ++t)
            if (case_signature(cid, k, t) == std::pair{a, b}) {
                r = t;
                break;
            }
        const std::string tag = sig(a, b) + " case " + std::to_string(cid);
        MatchupTable t = matchup_table(cid, k, r, bound);
        for (auto& cell : t.cells) c.expect(cell.equal, tag + " cell " + cell.rep + " vs " + cell.psi);
        for (const auto& rep : rep_list(cid, k, r))
            for (auto& [v, m] : rep.spectrum.enumerate(bound))
                c.expect(m == 1, tag + " " + rep.id.name + " multiplicity at " + v.str());
        for (const auto& oc : enumerate_real_forms(a, b, k))
            for (const auto& psi : psi_list(oc))
                for (auto& [v, m] : psi.spectrum.enumerate(bound))
                    c.expect(m == 1, tag + " " + psi.name + " multiplicity at " + v.str());
    }
}

void denominator(Ctx& c) {
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= n - 2; ++k)
            c.expect(check_denominator_identity(n, k), "n=" + std::to_string(n) + " k=" + std::to_string(k));
}

void clifford(Ctx& c) {
    CliffordSpace s2{2, 0}, s3{3, 0}, s12{1, 2};
    CliffordG e4 = build_E_even(s2, {0, 1}), e6 = build_E_even(s3, {0, 1, 2});
    c.expect(e4 * e4 == CliffordG::one(s2), "E4^2 = I");
    c.expect(e6 * e6 == CliffordG::scalar(s3, Gauss(-1)), "E6^2 = -I");
    CliffordG e3 = build_E_odd(s12, 0, {0}), e1 = build_E_odd(s12, 1, {});
    c.expect(e3 * e1 == -(e1 * e3), "E3 E1 = -E1 E3");
    for (int n = 2; n <= 6; ++n)
        c.expect(center_spin(n).iso == (n % 2 ? GroupTag::Z4 : GroupTag::Z2xZ2),
                 "center of Spin(" + std::to_string(2 * n) + ")");
    for (int k = 1; k <= 2; ++k)
        for (const auto& oc : all_cases(k, 2)) {
            ComponentReport rep;
            try {
                rep = verify_component_reps(oc.diagram);
            } catch (const Error& e) {
                c.expect(false, oc.diagram.str() + ": " + e.what());
                continue;
            }
            for (const auto& r : rep.representatives)
                c.expect(r.centralizes && r.in_spin, oc.diagram.str() + " representative " + r.name);
            for (const auto& p : rep.paths) c.expect(p.centralizes, oc.diagram.str() + " path " + p.name);
        }
}

void components(Ctx& c) {
    for (int k = 1; k <= 2; ++k)
        for (const auto& oc : all_cases(k, 2)) {
            try {
                auto rep = verify_component_reps(oc.diagram);
                c.expect(rep.agrees() && rep.table == component_group(oc.diagram),
                         oc.diagram.str() + ": table " + group_tag_name(rep.table) + ", computed " +
                             group_tag_name(rep.computed));
            } catch (const Error& e) {
                c.expect(false, oc.diagram.str() + ": " + e.what());
            }
        }
    int table_only = 0;
    for (int m = 2; m <= 12; m += 2)
        for (const auto& p : orthogonal_partitions(m)) {
            auto d = SignedDiagram::complex_from(p);
            try {
                auto rep = verify_component_reps(d);
                c.expect(rep.computed == component_group_complex(p), d.str() + ": computed " +
                                                                         group_tag_name(rep.computed) + ", rule " +
                                                                         group_tag_name(component_group_complex(p)));
            } catch (const Error& e) {
                if (e.code() != Errc::InvalidArgument) c.expect(false, d.str() + ": " + e.what());
                else ++table_only;
            }
        }
    if (table_only) c.res.details.push_back(std::to_string(table_only) + " complex diagrams are outside the Clifford verifier (repeated odd rows >= 3); the rule alone covers them");
}

void dimensions(Ctx& c) {
    for (int m = 2; m <= 12; m += 2)
        for (const auto& p : orthogonal_partitions(m)) {
            auto d = SignedDiagram::complex_from(p);
            c.expect(orbit_dimension(d, true).oracle_dim == complex_orbit_dim(p), d.str());
        }
    for (int k = 1; k <= 2; ++k)
        for (const auto& oc : all_cases(k, 2)) {
            auto od = orbit_dimension(oc.diagram, false);
            c.expect(od.is_small.value_or(false), oc.diagram.str() + " is not small");
        }
}

WeightMultiset as_multiset(const std::vector<Weight>& ws) {
    WeightMultiset out;
    for (const auto& w : ws) ++out[w];
    return out;
}

// Dominant integral vectors of the given type, rank and coordinate size.
std::vector<Weight> dominant_inputs(Ambient t, int rank, int lo, int hi, bool half) {
    std::vector<Weight> out;
    std::vector<HalfInt> cur;
    std::function<void()> rec = [&] {
        if (static_cast<int>(cur.size()) == rank) {
            Weight w(t, cur);
            if (is_dominant(w)) out.push_back(w);
            return;
        }
        for (int d = 2 * hi; d >= 2 * lo; --d) {
            if ((d % 2 != 0) != half) continue;
            cur.push_back(HalfInt::from_doubled(d));
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

void oracles(Ctx& c) {
    for (int rank = 1; rank <= 3; ++rank)
        for (const auto& beta : dominant_inputs(Ambient::A, rank, 0, 3, false))
            for (int k = 0; k <= 3; ++k) {
                std::vector<HalfInt> row(rank, 0);
                row[0] = HalfInt(k);
                c.expect(as_multiset(pieri_row(beta, k)) == tensor_decompose(beta, Weight(Ambient::A, row)),
                         "pieri " + beta.str() + " x " + std::to_string(k));
            }
    int outside = 0;
    for (int m = 2; m <= 7; ++m)
        for (int len = 0; len <= std::min(3, m); ++len)
            for (const auto& w : dominant_inputs(Ambient::A, len, 1, 3, false)) {
                std::vector<int> lam;
                for (auto x : w.coords) lam.push_back(static_cast<int>(x.to_int()));
                while (static_cast<int>(lam.size()) < m) lam.push_back(0);
                WeightMultiset lw;
                try {
                    lw = littlewood_branch(lam, m);
                } catch (const Error& e) {
                    if (e.code() != Errc::OutOfStableRange) throw;
                    ++outside;
                    continue;
                }
                c.expect(lw == branch_oracle(lam, m, m), "littlewood " + w.str() + " to so(" + std::to_string(m) + ")");
            }
    c.res.details.push_back(std::to_string(outside) + " Littlewood inputs lie outside the stable range");
    for (int rank = 1; rank <= 3; ++rank) {
        for (bool half : {false, true})
            for (const auto& beta : dominant_inputs(Ambient::D, rank, -3, 3, half))
                c.expect(spin_tensor(beta) == spin_tensor_oracle(beta), "spin " + beta.str());
        for (const auto& beta : dominant_inputs(Ambient::A, rank, -3, 3, false))
            for (int mc = 0; mc <= rank; ++mc)
                c.expect(spin_tensor(beta, mc) == spin_tensor_oracle(beta, mc),
                         "spin gl " + beta.str() + " minus " + std::to_string(mc));
    }
}

void bgg(Ctx& c) {
    for (int p : {2, 3})
        for (int chi = -5; chi <= 5; ++chi) {
            HalfInt x = HalfInt::from_doubled(chi);
            for (const auto& v : ktype_window(2 * p, 2 * p, 10))
                c.expect(bgg_cross_check(x, v).agrees(), "chi=" + x.str() + " " + v.str());
        }
}

void construction(Ctx& c) {
    for (int cid : {1, 3, 4, 6, 8})
        for (int k = 1; k <= 2; ++k)
            for (int r = 0; r <= 2; ++r) {
                if ((cid == 1 || cid == 4) && r > 0) continue;
                if ((cid == 3 && r < 1) || (cid == 8 && r < 2)) continue;
                for (int vi = 1; vi <= 4; ++vi) {
                    ConstructionSpectrum cs;
                    try {
                        cs = construction_spectrum(cid, k, r, Variant(vi));
                    } catch (const Error& e) {
                        if (e.code() == Errc::VariantUnavailable || e.code() == Errc::RegimeMismatch) continue;
                        throw;
                    }
                    for (const auto& v : ktype_window(cs.signature.first, cs.signature.second, 10))
                        c.expect(cs.member(v) == cs.matched.spectrum.member(v),
                                 "case " + std::to_string(cid) + " " + variant_name(Variant(vi)) + " " + v.str());
                }
            }
}

void central(Ctx& c) {
    for (auto [a, b] : {std::pair{4, 4}, std::pair{6, 4}})
        for (const auto& mu : genuine_char_reps(a, b))
            for (int e1 : {1, -1})
                for (int e2 : {1, -1})
                    for (bool et : {false, true}) {
                        CentralElement z{e1, e2, et};
                        c.expect(central_character_closed(mu, z) == central_character_clifford(mu, z, a, b),
                                 sig(a, b) + " " + mu.str() + " at " + z.str());
                    }
    for (int n = 4; n <= 8; ++n)
        for (int k = 1; 2 * k <= n - 2; ++k)
            for (auto [a, b] : admissible_groups(n, k)) {
                const int cid = case_for_signature(a, b, n, k);
                int want = 0;
                switch (cid) {
                    case 1: want = 4; break;
                    case 2: case 4: want = 2; break;
                    case 5: want = a - b == 2 ? 2 : 1; break;
                    default: want = 1;
                }
                c.expect(genuine_central_char_count(a, b, n, k) == want, sig(a, b) + " genuine characters");
            }
}

struct Spec {
    const char* title;
    std::int64_t budget;
    void (*run)(Ctx&);
};

const Spec kCriteria[] = {
    {"unipotent counts match the theorem table", 5000, counts},
    {"surviving Cartan classes at k = 1", 0, example_k1},
    {"matchup tables at bound 12", 30000, matchup},
    {"denominator identity", 0, denominator},
    {"Clifford relations, centers and centralizers", 0, clifford},
    {"component groups", 0, components},
    {"orbit dimensions and smallness", 0, dimensions},
    {"branching rules against the character oracle", 60000, oracles},
    {"BGG cross-check for Case 1", 0, bgg},
    {"construction spectra equal the named representations", 0, construction},
    {"central characters", 0, central},
};

}  // namespace

int criterion_count() { return static_cast<int>(std::size(kCriteria)); }

CriterionResult run_criterion(int id) {
    if (id < 1 || id > criterion_count()) throw Error(Errc::InvalidArgument, "criterion id out of range");
    const Spec& s = kCriteria[id - 1];
    CriterionResult res;
    res.id = id;
    res.title = s.title;
    res.budget_millis = s.budget;
    Ctx ctx{res};
    const auto t0 = Clock::now();
    try {
        s.run(ctx);
    } catch (const std::exception& e) {
        ctx.fail(std::string("exception: ") + e.what());
    }
    res.millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    if (ctx.failures > 8) res.details.push_back(std::to_string(ctx.failures - 8) + " further failures");
    res.pass = ctx.failures == 0 && res.checked > 0;
    if (s.budget && res.millis >= s.budget) {
        res.pass = false;
        res.details.push_back("over the time budget");
    }
    return res;
}

std::vector<CriterionResult> run_acceptance() {
    std::vector<CriterionResult> out;
    for (int i = 1; i <= criterion_count(); ++i) out.push_back(run_criterion(i));
    return out;
}

}  // namespace spinorb
