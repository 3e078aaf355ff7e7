#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "spinorb/spectra.hpp"

using namespace spinorb;

static OrbitCase orbit(int c, int k, int r, bool second = false) {
    const bool numbered = c == 1 || ((c == 2 || c == 3) && !second);
    auto d = case_diagram(c, k, r, second, numbered ? Numeral::I : Numeral::None);
    REQUIRE(d.has_value());
    auto oc = classify_case(*d);
    REQUIRE(oc.has_value());
    return *oc;
}

static std::set<KType> keys(const std::map<KType, int>& m) {
    std::set<KType> s;
    for (auto& [v, n] : m) s.insert(v);
    return s;
}

// Every dominant K-type of Spin(a) x Spin(b) with doubled coordinates in [-B, B].
static std::vector<KType> window(int a, int b, int B) {
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
                for (int d = B; d >= -B; --d) {
                    if ((d & 1) != cls) continue;
                    HalfInt x = HalfInt::from_doubled(d);
                    if (!cur.empty() && cur.back() < x) continue;
                    cur.push_back(x);
                    rec();
                    cur.pop_back();
                }
            };
            rec();
        }
        return out;
    };
    std::vector<KType> out;
    for (auto& l : side(a))
        for (auto& r : side(b)) out.push_back({l, r});
    return out;
}

TEST_CASE("infinitesimal character") {
    CHECK(infl_char(4, 1).str() == "(1, 0; 3/2, 1/2)");
    CHECK(infl_char(6, 1).str() == "(3, 2, 1, 0; 3/2, 1/2)");
    CHECK(infl_char(6, 2).regular);
    CHECK(infl_char(6, 1).coords.rank() == 6);
    CHECK_THROWS_AS(infl_char(4, 2), Error);
    CHECK_THROWS_AS(infl_char(4, 0), Error);
}

TEST_CASE("psi lists and chi values") {
    auto c1 = psi_list(orbit(1, 1, 0));
    REQUIRE(c1.size() == 4);
    CHECK(c1[0].defining == parse_ktype("1/2,1/2|0,0", 4, 4));
    CHECK(c1[3].defining == parse_ktype("1,1|1/2,-1/2", 4, 4));
    CHECK(c1[0].chi == HalfInt::from_doubled(-1));

    auto c2 = psi_list(orbit(2, 1, 1, true));
    REQUIRE(c2.size() == 2);
    CHECK(c2[0].name == "phi1");
    CHECK(c2[0].chi == HalfInt::from_doubled(1));
    CHECK(c2[1].defining == parse_ktype("0,0,0|1/2,-1/2", 6, 4));

    CHECK(psi_list(orbit(2, 1, 1)).size() == 2);
    CHECK(designated_chi(orbit(2, 1, 2)) == HalfInt::from_doubled(-5));
    CHECK(psi_list(orbit(4, 1, 0)).size() == 2);
    CHECK(designated_chi(orbit(4, 1, 0)) == HalfInt::from_doubled(-1));
    CHECK(psi_list(orbit(5, 1, 0)).size() == 2);
    CHECK(designated_chi(orbit(6, 1, 0)) == HalfInt::from_doubled(1));
    auto c5 = psi_list(orbit(5, 1, 2));
    REQUIRE(c5.size() == 1);
    CHECK(c5[0].chi == HalfInt::from_doubled(5));
    CHECK(psi_list(orbit(7, 1, 2)).size() == 2);
    CHECK(designated_chi(orbit(8, 1, 3)) == HalfInt::from_doubled(-5));

    // Each psi contains its own defining K-type.
    for (auto& oc : all_cases(1, 3))
        for (auto& ps : psi_list(oc)) CHECK_MESSAGE(sections_membership(ps, ps.defining) == 1, ps.name);
}

TEST_CASE("sections membership and enumeration") {
    auto psi = psi_list(orbit(1, 1, 0));
    CHECK(sections_membership(psi[0], parse_ktype("3/2,1/2|1,0", 4, 4)) == 1);
    CHECK(sections_membership(psi[0], parse_ktype("3/2,1/2|1,1", 4, 4)) == 0);
    CHECK(sections_membership(psi[1], parse_ktype("3/2,1/2|1,0", 4, 4)) == 0);

    // beta_1 <= 1 window.
    auto w = enumerate_sections(psi[0], 3);
    CHECK(w == std::vector<KType>{parse_ktype("1/2,1/2|0,0", 4, 4), parse_ktype("3/2,1/2|1,0", 4, 4),
                                  parse_ktype("3/2,3/2|1,-1", 4, 4), parse_ktype("3/2,3/2|1,1", 4, 4)});
    for (auto& ps : psi) CHECK(enumerate_sections(ps, 0).size() <= 1);

    // Case 5 with r > 0: left coordinates past k+1 are forced to zero.
    auto c5 = psi_list(orbit(5, 1, 1));
    CHECK(sections_membership(c5[0], parse_ktype("0,0,0|3/2", 7, 3)) == 1);
    CHECK(sections_membership(c5[0], parse_ktype("1,0,0|3/2", 7, 3)) == 1);
    CHECK(sections_membership(c5[0], parse_ktype("1,1,1|3/2", 7, 3)) == 0);
    for (auto& v : enumerate_sections(c5[0], 10)) CHECK(v.left.coords[2] == HalfInt(0));
}

TEST_CASE("psi spectra partition the Det^chi spectrum") {
    const int B = 8;
    for (int k = 1; k <= 2; ++k)
        for (auto& oc : all_cases(k, 3)) {
            std::map<KType, int> sum;
            for (auto& ps : psi_list(oc))
                for (auto& v : enumerate_sections(ps, B)) ++sum[v];
            for (auto& [v, n] : sum) CHECK(n == 1);
            CHECK_MESSAGE(keys(sum) == keys(det_spectrum(oc).enumerate(B)), oc.diagram.str());
        }
}

TEST_CASE("zeta equivariance of sections") {
    for (int k = 1; k <= 2; ++k)
        for (auto& oc : all_cases(k, 2)) {
            auto z = classify_case(apply_outer(OuterAut::Zeta, oc.diagram));
            REQUIRE(z.has_value());
            auto a = psi_list(oc), b = psi_list(*z);
            REQUIRE(a.size() == b.size());
            // Orbits fixed by zeta permute their psi list, so match images against the whole list.
            std::set<std::vector<KType>> target;
            for (auto& ps : b) target.insert(enumerate_sections(ps, 8));
            std::set<std::vector<KType>> images;
            for (auto& ps : a) {
                std::vector<KType> img;
                for (auto& v : enumerate_sections(ps, 8)) img.push_back(apply_outer(OuterAut::Zeta, v));
                std::sort(img.begin(), img.end());
                images.insert(img);
            }
            CHECK_MESSAGE(images == target, oc.diagram.str());
            if (!(z->diagram == oc.diagram))
                for (size_t i = 0; i < a.size(); ++i) {
                    std::vector<KType> img;
                    for (auto& v : enumerate_sections(a[i], 8)) img.push_back(apply_outer(OuterAut::Zeta, v));
                    std::sort(img.begin(), img.end());
                    CHECK(img == enumerate_sections(b[i], 8));
                }
        }
}

TEST_CASE("representation lists") {
    CHECK(rep_list(1, 1, 0).size() == 16);
    CHECK(rep_list(2, 1, 1).size() == 6);
    CHECK(rep_list(3, 1, 1).size() == 6);
    CHECK(rep_list(4, 1, 0).size() == 4);
    CHECK(rep_list(4, 1, 0, true).size() == 6);
    CHECK(rep_list(5, 1, 0).size() == 2);
    CHECK(rep_list(5, 1, 1).size() == 1);
    CHECK(rep_list(7, 1, 2, true).size() == 3);
    CHECK_THROWS_AS(rep_list(2, 1, 0), Error);

    auto v = parse_ktype("3/2,1/2|1,0", 4, 4);
    CHECK(rep_spectrum_membership(rep_lookup(1, 1, 0, "pi1"), v) == 1);
    CHECK(rep_spectrum_membership(rep_lookup(1, 1, 0, "pi2"), v) == 0);
    CHECK(rep_spectrum_membership(rep_lookup(2, 1, 1, "tau1"), parse_ktype("0,0,0|1/2,1/2", 6, 4)) == 1);
    CHECK(rep_lookup(4, 1, 0, "pi1^e").id.conjectural);
    CHECK(rep_lookup(7, 1, 2, "pi").id.is_union);
}

TEST_CASE("central characters of representations") {
    // Every member of one spectrum has one central character.
    for (int c = 1; c <= 8; ++c)
        for (int k = 1; k <= 2; ++k)
            for (int r = 0; r <= 3; ++r) {
                std::vector<RepSpectrum> reps;
                try {
                    reps = rep_list(c, k, r);
                } catch (const Error&) {
                    continue;
                }
                for (auto& rs : reps) {
                    std::set<std::vector<int>> sigs;
                    for (auto& [v, n] : rs.spectrum.enumerate(8))
                        sigs.insert(central_signature(v, rs.id.signature.first, rs.id.signature.second));
                    CHECK(sigs.size() <= 1);
                }
            }
    // Same subscript, same central character: exact at p = 2, on the sign part at p = 3.
    for (int k : {1, 2}) {
        std::map<char, std::set<std::string>> tags;
        for (auto& rs : rep_list(1, k, 0)) {
            std::string t = rs.id.central_tag;
            if (k == 2) t = t.substr(0, t.rfind(','));
            tags[rs.id.name.back()].insert(t);
        }
        CHECK(tags.size() == 4);
        for (auto& [sub, s] : tags) CHECK(s.size() == 1);
    }
    CHECK(rep_lookup(1, 2, 0, "pi1").id.central_tag != rep_lookup(1, 2, 0, "sigma1").id.central_tag);
}

TEST_CASE("matchup tables") {
    struct P {
        int c, k, r;
    };
    for (P p : {P{1, 1, 0}, P{2, 1, 1}, P{3, 1, 1}, P{4, 1, 0}, P{5, 1, 0}, P{6, 1, 0}, P{5, 1, 1}, P{7, 1, 2},
                P{8, 1, 2}, P{1, 2, 0}, P{2, 2, 1}}) {
        MatchupTable t = matchup_verify(p.c, p.k, p.r, 8);
        CHECK(t.all_equal());
        for (auto& cell : t.cells) CHECK_MESSAGE(cell.count > 0, cell.rep);
    }
    MatchupTable t1 = matchup_table(1, 1, 0, 8);
    CHECK(t1.cells.size() == 16);
    CHECK(t1.row_central.size() == 4);
    CHECK(t1.notes.empty());
    CHECK_FALSE(matchup_table(1, 2, 0, 4).notes.empty());

    MatchupTable t4 = matchup_table(4, 1, 0, 8);
    REQUIRE(t4.cells.size() == 6);
    CHECK(t4.cells[0].rep == "pi2");
    CHECK(t4.cells[0].psi == "psi1+psi2");
    CHECK(t4.cells[1].conjectural);

    MatchupTable t5 = matchup_table(5, 1, 1, 8);
    REQUIRE(t5.cells.size() == 1);
    CHECK(t5.cells[0].psi == "Det^{3/2}");
}

TEST_CASE("BGG cross-check") {
    const HalfInt m12 = HalfInt::from_doubled(-1);
    BggCheck b = bgg_cross_check(m12, parse_ktype("3/2,1/2|1,0", 4, 4));
    CHECK(b.ell0);
    CHECK(b.bgg);
    CHECK(b.closed_form);
    CHECK(b.ad_h == HalfInt(-4));

    BggCheck w1 = bgg_cross_check(m12, parse_ktype("1/2,1/2|1,0", 4, 4));
    CHECK(w1.w1);
    CHECK_FALSE(w1.bgg);
    BggCheck bad = bgg_cross_check(m12, parse_ktype("5/2,5/2|1,0", 4, 4));
    CHECK_FALSE(bad.ell0);
    CHECK_FALSE(bad.bgg);

    for (int p : {2, 3})
        for (int chi = -5; chi <= 5; ++chi) {
            HalfInt x = HalfInt::from_doubled(chi);
            for (auto& v : window(2 * p, 2 * p, p == 2 ? 6 : 4)) {
                BggCheck c = bgg_cross_check(x, v);
                CHECK(c.agrees());
            }
        }
    // The designated chi reproduces the Case 1 Det spectrum.
    auto det = det_spectrum(orbit(1, 1, 0));
    for (auto& v : window(4, 4, 6)) CHECK(det.member(v) == bgg_cross_check(m12, v).bgg);
}

TEST_CASE("construction spectra equal the named representations") {
    for (int c : {1, 3, 4, 6, 8})
        for (int k = 1; k <= 2; ++k)
            for (int r = 0; r <= 3; ++r)
                for (int vi = 1; vi <= 4; ++vi) {
                    ConstructionSpectrum cs;
                    try {
                        cs = construction_spectrum(c, k, r, Variant(vi));
                    } catch (const Error&) {
                        continue;
                    }
                    for (auto& v : window(cs.signature.first, cs.signature.second, 8))
                        CHECK(cs.member(v) == cs.matched.spectrum.member(v));
                }
    CHECK(construction_spectrum(1, 1, 0, Variant::I).matched.id.name == "pi1");
    CHECK(construction_spectrum(3, 1, 1, Variant::II).matched.id.name == "pi2");
    CHECK(construction_spectrum(8, 1, 2, Variant::I).matched.id.name == "pi^e");
    CHECK(construction_spectrum(6, 2, 0, Variant::I).matched.id.case_id == 8);

    auto unavailable = [](int c, int k, int r, Variant v) {
        try {
            construction_spectrum(c, k, r, v);
        } catch (const Error& e) {
            return e.code() == Errc::VariantUnavailable;
        }
        return false;
    };
    CHECK(unavailable(2, 1, 1, Variant::I));
    CHECK(unavailable(3, 1, 1, Variant::III));
    CHECK(unavailable(6, 1, 0, Variant::I));
    CHECK(parse_variant("iv") == Variant::IV);
}

TEST_CASE("restriction of small representations") {
    auto names = [](const LsRep& r) {
        std::set<std::string> s;
        for (auto& p : r.pieces) s.insert(p.name);
        return s;
    };
    auto c1 = ls_restrict(5, 4, true, false, 8);
    CHECK(c1.regime == "p'-1 = q'");
    REQUIRE(c1.reps.size() == 4);
    CHECK(names(c1.reps[0]) == std::set<std::string>{"pi3", "pi4"});
    CHECK(names(c1.reps[1]) == std::set<std::string>{"tau3", "tau4"});
    CHECK(names(c1.reps[2]) == std::set<std::string>{"sigma1", "sigma2"});
    CHECK(names(c1.reps[3]) == std::set<std::string>{"xi1", "xi2"});

    auto c2 = ls_restrict(7, 4, true, false, 8);
    CHECK(c2.regime == "p'-1 > q'");
    REQUIRE(c2.reps.size() == 2);
    CHECK(names(c2.reps[0]) == std::set<std::string>{"pi1", "pi2"});
    CHECK(names(c2.reps[1]) == std::set<std::string>{"sigma1", "sigma2"});
    CHECK(names(ls_restrict(5, 6, true, true, 8).reps[0]) == std::set<std::string>{"tau1", "tau2"});

    auto c4 = ls_restrict(5, 6, false, true, 8);
    REQUIRE(c4.reps.size() == 1);
    REQUIRE(c4.reps[0].pieces.size() == 1);
    CHECK(c4.reps[0].pieces[0].name == "pi1");
    CHECK(c4.reps[0].pieces[0].halves == std::vector<std::string>{"pi1^e", "pi1^o"});

    CHECK(names(ls_restrict(5, 4, false, false, 8).reps[2]) == std::set<std::string>{"pi2"});
    CHECK(names(ls_restrict(7, 4, false, false, 8).reps[0]) == std::set<std::string>{"pi"});
    CHECK(names(ls_restrict(5, 8, false, true, 8).reps[0]) == std::set<std::string>{"pi"});

    for (auto& rep : c1.reps)
        for (auto& [v, n] : rep.restricted) CHECK(n == 1);
    CHECK_THROWS_AS(ls_restrict(4, 4, true, false, 4), Error);
}

TEST_CASE("generalized Verma alternating sums") {
    for (Variant v : {Variant::I, Variant::II})
        for (int p = 1; p <= 3; ++p)
            for (int q = p; q <= 4; ++q) {
                VermaCheck r = verma_support_check(v, p, q, 3);
                CHECK(r.checked > 0);
                CHECK(r.ok());
            }
    for (Variant v : {Variant::III, Variant::IV})
        for (int p = 1; p <= 3; ++p) {
            VermaCheck r = verma_support_check(v, p, p, 3);
            CHECK(r.metaplectic_identity);
            CHECK(r.ok());
        }
    auto code = [](Variant v, int p, int q) {
        try {
            verma_support_check(v, p, q, 2);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::Parse;
    };
    CHECK(code(Variant::I, 4, 4) == Errc::RankCapExceeded);
    CHECK(code(Variant::III, 2, 3) == Errc::VariantUnavailable);
}
