#include "doctest.h"
#include "spinorb/component.hpp"
#include "spinorb/orbit.hpp"

using namespace spinorb;

static std::vector<std::string> names(const std::vector<OrbitCase>& v) {
    std::vector<std::string> out;
    for (const auto& oc : v) out.push_back(oc.diagram.str());
    return out;
}

TEST_CASE("diagram parse and print round trip") {
    for (const char* s : {"[3+ 2^2 1-]I", "[3- 2^2 1+,3]II", "[3+ 2^2 1- 1+,2]", "[2^4]", "[5 3 1^2]"}) {
        SignedDiagram d = SignedDiagram::parse(s);
        CHECK(d.str() == s);
        CHECK(d.is_valid());
    }
    CHECK(SignedDiagram::parse("[3+ 2^2 1+ 1-,2]").signature() == std::make_pair(5, 5));
    CHECK_THROWS_AS(SignedDiagram::parse("[3+ 2^2"), Error);
}

TEST_CASE("outer automorphisms on diagrams") {
    SignedDiagram d = SignedDiagram::parse("[3+ 2^2 1-]I");
    CHECK(apply_outer(OuterAut::Zeta, d).str() == "[3+ 2^2 1-]II");
    CHECK(apply_outer(OuterAut::Eta, d).str() == "[3- 2^2 1+]I");
    CHECK(apply_outer(OuterAut::Eta, apply_outer(OuterAut::Eta, d)) == d);
}

TEST_CASE("enumerate real forms") {
    CHECK(names(enumerate_real_forms(4, 4, 1)) ==
          std::vector<std::string>{"[3+ 2^2 1-]I", "[3+ 2^2 1-]II", "[3- 2^2 1+]I", "[3- 2^2 1+]II"});
    CHECK(names(enumerate_real_forms(6, 4, 1)) ==
          std::vector<std::string>{"[3- 2^2 1+,3]I", "[3- 2^2 1+,3]II", "[3+ 2^2 1- 1+,2]"});
    CHECK(enumerate_real_forms(3, 3, 1).empty());
    CHECK_THROWS_AS(enumerate_real_forms(4, 3, 1), Error);
    auto c4 = enumerate_real_forms(5, 5, 1);
    REQUIRE(c4.size() == 2);
    CHECK(c4[0].case_id == 4);
    CHECK(c4[0].label_mismatch());
    CHECK(c4[0].label_signature == std::make_pair(3, 3));
}

TEST_CASE("classify case") {
    auto c = classify_case(SignedDiagram::parse("[3+ 2^2 1-]I"));
    REQUIRE(c);
    CHECK(c->case_id == 1);
    CHECK(c->k == 1);
    c = classify_case(SignedDiagram::parse("[3+ 2^2 1+ 1-,2]"));
    REQUIRE(c);
    CHECK(c->case_id == 4);
    CHECK(c->signature == std::make_pair(5, 5));
    CHECK_FALSE(classify_case(SignedDiagram::parse("[2^4]")));
    // Case 2 with r = 0 is Case 1, so no Case-2 label there.
    CHECK_FALSE(case_diagram(2, 1, 0, false, Numeral::I));
}

TEST_CASE("enumerated forms are closed under eta") {
    for (int k = 1; k <= 2; ++k)
        for (const auto& oc : all_cases(k, 2)) {
            auto sw = classify_case(apply_outer(OuterAut::Eta, oc.diagram));
            REQUIRE(sw);
            CHECK(sw->signature == std::make_pair(oc.signature.second, oc.signature.first));
            CHECK(component_group(sw->diagram) == component_group(oc.diagram));
            if (oc.diagram.numeral != Numeral::None)
                CHECK(component_group(apply_outer(OuterAut::Zeta, oc.diagram)) == component_group(oc.diagram));
        }
}

TEST_CASE("lie triples") {
    auto t = lie_triple(SignedDiagram::parse("[3+ 2^2 1-]I"));
    CHECK(t.h_text == "(2,1 | 1,0)");
    CHECK(t.bracket_ok);
    CHECK(t.jordan == std::vector<int>{3, 2, 2, 1});
    CHECK(lie_triple(SignedDiagram::parse("[3+ 2^2 1+]")).h_text == "(2,1 | 1; 0)");
    for (int k = 1; k <= 2; ++k)
        for (const auto& oc : all_cases(k, 2)) {
            auto lt = lie_triple(oc.diagram);
            CHECK(lt.bracket_ok);
            CHECK(lt.jordan_ok);
        }
}

TEST_CASE("component group tables") {
    CHECK(component_group(SignedDiagram::parse("[3+ 2^2 1-]I")) == GroupTag::Z2xZ2);
    CHECK(component_group(SignedDiagram::parse("[3+ 2^2 1+,3]")) == GroupTag::Trivial);
    CHECK(component_group(SignedDiagram::parse("[3+ 2^2 1+]")) == GroupTag::Z2);
    CHECK(component_group_complex({3, 2, 2, 1, 1, 1}) == GroupTag::Z2);
    CHECK(component_group_complex({2, 2, 2, 2}) == GroupTag::Z2);
    CHECK(component_group_complex({5, 1}) == GroupTag::Z4);
    CHECK(component_group_complex({7, 1}) == GroupTag::Z2xZ2);
    CHECK_THROWS_AS(component_group(SignedDiagram::parse("[1+,4 1-,4]")), Error);
}

TEST_CASE("orbit dimension") {
    CHECK(complex_orbit_dim({3, 2, 2, 1}) == 16);
    CHECK(complex_orbit_dim({1, 1, 1, 1}) == 0);
    CHECK(small_bound(4, 4) == 8);
    auto od = orbit_dimension(SignedDiagram::parse("[3+ 2^2 1-]I"), true);
    CHECK(od.k_orbit_dim == 8);
    CHECK(od.oracle_dim == 16);
    CHECK(*od.is_small);
    for (int m = 2; m <= 12; m += 2)
        for (const auto& p : orthogonal_partitions(m)) {
            auto d = SignedDiagram::complex_from(p);
            CHECK(orbit_dimension(d, true).oracle_dim == complex_orbit_dim(p));
        }
}

TEST_CASE("component representatives in the Clifford algebra") {
    auto r = verify_component_reps(SignedDiagram::parse("[3+ 2^2 1-]I"));
    CHECK(r.computed == GroupTag::Z2xZ2);
    CHECK(r.agrees());
    for (const auto& rc : r.representatives) CHECK(rc.centralizes);
    for (const auto& pc : r.paths) CHECK(pc.centralizes);
    CHECK(verify_component_reps(SignedDiagram::complex_from({2, 2, 2, 2})).computed == GroupTag::Z2);
    CHECK(verify_component_reps(SignedDiagram::parse("[3+ 2^2 1+,3]")).computed == GroupTag::Trivial);
    CHECK(verify_component_reps(SignedDiagram::complex_from({5, 1})).computed == GroupTag::Z4);
    CHECK_THROWS_AS(verify_component_reps(SignedDiagram::complex_from({3, 3})), Error);
}
