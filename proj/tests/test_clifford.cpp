#include <doctest.h>

#include <random>

#include "spinorb/clifford.hpp"

using namespace spinorb;

namespace {
CliffordSpace sp4{4, 0};
CliffordG g(int i) { return CliffordG::gen(sp4, i); }
CliffordG scal(std::int64_t k) { return CliffordG::scalar(sp4, Gauss(k)); }
}  // namespace

TEST_CASE("Clifford relations") {
    CHECK(g(0) * g(1) + g(1) * g(0) == scal(2));
    CHECK((g(0) * g(0)).is_zero());
    CHECK(g(0) * g(2) == -(g(2) * g(0)));
    CliffordSpace s1{1, 1};
    CliffordG v = CliffordG::gen(s1, s1.v(0));
    CHECK(v * v == CliffordG::one(s1));
}

TEST_CASE("Clifford associativity and star") {
    std::mt19937 rng(7);
    CliffordSpace sp{2, 1};
    auto rnd = [&] {
        CliffordG x(sp);
        for (int t = 0; t < 4; ++t)
            x.add(rng() % (1u << sp.generators()), Gauss(Rational(int(rng() % 7) - 3), Rational(int(rng() % 5) - 2)));
        return x;
    };
    for (int it = 0; it < 200; ++it) {
        CliffordG a = rnd(), b = rnd(), c = rnd();
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).star() == b.star() * a.star());
        CHECK((a * b).alpha() == a.alpha() * b.alpha());
        CHECK(a.star().star() == a);
    }
}

TEST_CASE("E elements") {
    CliffordSpace s2{2, 0}, s3{3, 0};
    CHECK(build_E_even(s2, {0, 1}) * build_E_even(s2, {0, 1}) == CliffordG::one(s2));
    CHECK(build_E_even(s3, {0, 1, 2}) * build_E_even(s3, {0, 1, 2}) == CliffordG::scalar(s3, Gauss(-1)));
    // E_3 and E_1 on disjoint blocks: v1 with pair 0, v2 alone.
    CliffordSpace s{1, 2};
    CliffordG e3 = build_E_odd(s, 0, {0}), e1 = build_E_odd(s, 1, {});
    CHECK(e3 * e1 == -(e1 * e3));
    CHECK(e3 * e3 == CliffordG::scalar(s, Gauss(-1)));
    // E_{2n} acts by -1 on V.
    CliffordG E = build_E_even(s3, {0, 1, 2});
    for (int i = 0; i < 6; ++i) CHECK(rho_action(E, CliffordG::gen(s3, i)) == -CliffordG::gen(s3, i));
    CHECK(rho_action(e3, CliffordG::gen(s, 0)) == -CliffordG::gen(s, 0));
    CHECK(rho_action(e3, CliffordG::gen(s, s.v(1))) == CliffordG::gen(s, s.v(1)));
}

TEST_CASE("rho is an isometry and rejects non-Pin elements") {
    CliffordSpace s{2, 0};
    CliffordG x = minus_on_pair(s, 0) * (CliffordG::one(s) + CliffordG::gen(s, 0) * CliffordG::gen(s, 2));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CliffordG a = CliffordG::gen(s, i), b = CliffordG::gen(s, j);
            CHECK(quad(rho_action(x, a), rho_action(x, b)) == quad(a, b));
        }
    CHECK_THROWS_AS(rho_action(CliffordG::one(s) + CliffordG::gen(s, 0), CliffordG::gen(s, 1)), Error);
}

TEST_CASE("trig ring") {
    Trig c = Trig::c(), s = Trig::s();
    CHECK(c * c + s * s == Trig(1));
    CHECK((c + s).eval(Gauss(0), Gauss(1)) == Gauss(1));
}

TEST_CASE("centers") {
    CHECK(center_spin(4).iso == GroupTag::Z2xZ2);
    CHECK(center_spin(3).iso == GroupTag::Z4);
    CHECK(center_spin_pair(4, 4).iso == GroupTag::Z2xZ2xZ2);
    CHECK(center_spin_pair(6, 4).iso == GroupTag::Z2xZ4);
    CHECK(center_spin_pair(5, 3).iso == GroupTag::Z2xZ2);
}

TEST_CASE("central characters") {
    HalfInt h = HalfInt::half();
    KType mu{wD({h, h}), wD({0, 0})};
    CHECK(central_character_closed(mu, {-1, 1, false}) == 2);
    CHECK(central_character_clifford(mu, {-1, 1, false}, 4, 4) == 2);
    KType integral{wD({2, 1}), wD({1, 0})};
    CHECK(central_character_closed(integral, {-1, -1, false}) == 0);
    // mu_1 at the E-type element: i^p with p = 2.
    CHECK(central_character_closed(mu, {1, 1, true}) == 2);
    CHECK(central_character_clifford(mu, {1, 1, true}, 4, 4) == 2);
    CHECK(genuineness(integral) == Genuineness::FactorsSO);
    CHECK(genuineness(KType{wD({h, h}), wD({h, -h})}) == Genuineness::FactorsSpin);
    CHECK(genuineness(mu) == Genuineness::Genuine);
    CHECK(genuine_char_index(mu, 4, 4) == 1);
}
