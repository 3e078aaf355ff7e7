#include <doctest.h>

#include <random>

#include "spinorb/weight.hpp"

using namespace spinorb;

static const HalfInt h = HalfInt::half();

TEST_CASE("halfint arithmetic and text form") {
    HalfInt a = HalfInt(1) + h;
    CHECK(a.str() == "3/2");
    CHECK((-a).str() == "-3/2");
    CHECK(HalfInt(4).str() == "4");
    CHECK(HalfInt::parse("-7/2") == -HalfInt(3) - h);
    CHECK(HalfInt::parse("5") == HalfInt(5));
    CHECK_THROWS_AS(HalfInt::parse("1/3"), Error);
    CHECK_THROWS_AS(HalfInt::parse("x"), Error);
    CHECK((a + a).is_integer());
    CHECK(!a.is_integer());

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-40, 40);
    for (int i = 0; i < 200; ++i) {
        HalfInt x = HalfInt::from_doubled(d(rng)), y = HalfInt::from_doubled(d(rng)), z = HalfInt::from_doubled(d(rng));
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK(HalfInt::parse(x.str()) == x);
    }
}

TEST_CASE("dominance") {
    CHECK(is_dominant(wD({1, -1})));
    CHECK(!is_dominant(wB({1, -1})));
    CHECK(is_dominant(wD({HalfInt(1) + h, h, h})));
    CHECK(!is_dominant(wD({h, HalfInt(1) + h})));
    CHECK(!is_dominant(wA({-3, 2})));
    CHECK(is_dominant(wA({2, 2, -3})));
    CHECK(is_dominant(wD({-2})));
}

TEST_CASE("root lattice of D") {
    CHECK(in_root_lattice_D(wD({1, 1, 0, 0})));
    CHECK(!in_root_lattice_D(wD({1, 0, 0, 0})));
    CHECK(!in_root_lattice_D(wD({h, h, h, h})));

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int i = 0; i < 200; ++i) {
        Weight x = wD({d(rng), d(rng), d(rng)}), y = wD({d(rng), d(rng), d(rng)});
        if (!in_root_lattice_D(x) || !in_root_lattice_D(y)) continue;
        Weight s = x, nx = x;
        for (int j = 0; j < 3; ++j) {
            s.coords[j] += y.coords[j];
            nx.coords[j] = -nx.coords[j];
        }
        CHECK(in_root_lattice_D(s));
        CHECK(in_root_lattice_D(nx));
    }
}

TEST_CASE("parity class") {
    CHECK(parity_class({wD({1, 1}), wD({0, 0})}) == Parity::Even);
    CHECK(parity_class({wD({1, 0}), wD({0, 0})}) == Parity::Odd);
    CHECK(parity_class({wD({0, 0}), wD({0, 0})}) == Parity::Even);
    CHECK(parity_class({wD({h, 0}), wD({0, 0})}) == Parity::NonIntegral);
}

TEST_CASE("outer automorphisms") {
    KType v{wD({1, 1}), wD({2, 0})};
    CHECK(apply_outer(OuterAut::Zeta, v) == KType{wD({1, -1}), wD({2, 0})});
    CHECK(apply_outer(OuterAut::Identity, v) == v);
    KType u{wD({1, 0}), wD({2, 2})};
    CHECK(apply_outer(OuterAut::Eta, u) == KType{wD({2, 2}), wD({1, 0})});
    CHECK_THROWS_AS(apply_outer(OuterAut::Eta, KType{wD({1, 0}), wD({1})}), Error);
    try {
        apply_outer(OuterAut::Eta, KType{wD({1, 0}), wD({1})});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::EtaOnUnequalRanks);
    }
    CHECK(compose(OuterAut::Zeta, OuterAut::Eta) == OuterAut::ZetaEta);
    CHECK(compose(OuterAut::Zeta, OuterAut::Zeta) == OuterAut::Identity);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int i = 0; i < 100; ++i) {
        KType w{Weight(Ambient::D, {HalfInt::from_doubled(d(rng)), HalfInt::from_doubled(d(rng))}),
                Weight(Ambient::D, {HalfInt::from_doubled(d(rng)), HalfInt::from_doubled(d(rng))})};
        CHECK(apply_outer(OuterAut::Zeta, apply_outer(OuterAut::Zeta, w)) == w);
        CHECK(apply_outer(OuterAut::Eta, apply_outer(OuterAut::Eta, w)) == w);
        CHECK(apply_outer(OuterAut::ZetaEta, w) == apply_outer(OuterAut::Eta, apply_outer(OuterAut::Zeta, w)));
    }
}
