#include <doctest.h>

#include "spinorb/weyl.hpp"

using namespace spinorb;

static const HalfInt h = HalfInt::half();
static const HalfInt h3 = HalfInt(1) + HalfInt::half();

TEST_CASE("weyl group orders and signs") {
    CHECK(weyl_group(Ambient::A, 3).size() == 6);
    CHECK(weyl_group(Ambient::B, 3).size() == 48);
    CHECK(weyl_group(Ambient::D, 3).size() == 24);
    for (auto t : {Ambient::A, Ambient::B, Ambient::D})
        for (auto& w : weyl_group(t, 3)) CHECK(w.sign() == ((w.length() % 2) ? -1 : 1));
    CHECK_THROWS_AS(weyl_group(Ambient::B, 7), Error);
}

TEST_CASE("weyl orbits") {
    auto o = weyl_orbit(wD({1, 0}));
    CHECK(o.size() == 4);
    CHECK(weyl_orbit(wD({0, 0, 0})).size() == 1);
    auto b = weyl_orbit(wB({1}));
    REQUIRE(b.size() == 2);
    CHECK(b[0] == wB({-1}));
}

TEST_CASE("irreducible characters") {
    auto c = irr_character(wA({1, 0}));
    CHECK(c.terms().size() == 2);
    CHECK(c.mult({1, 0}) == 1);
    CHECK(c.mult({0, 1}) == 1);
    CHECK(irr_character(wD({0, 0})).dimension() == 1);
    CHECK(irr_character(wB({1, 0})).dimension() == 5);
    CHECK(irr_character(wB({h, h})).dimension() == 4);
    CHECK(irr_character(wD({2, 1, 1})).dimension() == weyl_dimension(wD({2, 1, 1})));
    CHECK_THROWS_AS(irr_character(wD({0, 1})), Error);

    auto ch = irr_character(wB({2, 1}));
    for (auto& [mu, m] : ch.terms())
        for (auto& w : weyl_group(Ambient::B, 2)) CHECK(ch.mult(w.act(mu)) == m);
}

TEST_CASE("tensor products") {
    auto t = tensor_decompose(wA({1, 0}), wA({1, 0}));
    CHECK(t == WeightMultiset{{wA({2, 0}), 1}, {wA({1, 1}), 1}});
    auto u = tensor_decompose(wB({2, 1}), wB({0, 0}));
    CHECK(u == WeightMultiset{{wB({2, 1}), 1}});
    auto d = tensor_decompose(wD({1, 0}), wD({1, 0}));
    CHECK(d[wD({0, 0})] == 1);
    CHECK(tensor_decompose(wD({2, 1, 0}), wD({1, 1, 1})) == tensor_decompose(wD({1, 1, 1}), wD({2, 1, 0})));
}

TEST_CASE("pieri") {
    CHECK(pieri_row(wA({1, 0}), 2) == std::vector<Weight>{wA({3, 0}), wA({2, 1})});
    CHECK(pieri_row(wA({4, 2, 1}), 0) == std::vector<Weight>{wA({4, 2, 1})});
    CHECK(pieri_row(wA({2, 2}), 1) == std::vector<Weight>{wA({3, 2})});
}

TEST_CASE("littlewood-richardson coefficients") {
    CHECK(lr_coefficient({2, 1}, {1}, {1, 1}) == 1);
    CHECK(lr_coefficient({2, 1}, {1}, {2}) == 1);
    CHECK(lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}) == 2);
    CHECK(lr_coefficient({2, 2}, {1}, {2}) == 0);
    CHECK(lr_coefficient({}, {}, {}) == 1);
}

TEST_CASE("littlewood branching") {
    CHECK(littlewood_branch({1, 0, 0}, 3) == WeightMultiset{{wB({1}), 1}});
    CHECK(littlewood_branch({0, 0, 0}, 3) == WeightMultiset{{wB({0}), 1}});
    CHECK(littlewood_branch({2, 0, 0}, 3) == WeightMultiset{{wB({2}), 1}, {wB({0}), 1}});
    CHECK(littlewood_branch({2, 2}, 3) == branch_oracle({2, 2}, 3));
    CHECK_THROWS_AS(littlewood_branch({1, 1, 1}, 4), Error);
}

TEST_CASE("spin tensor rules") {
    CHECK(spin_tensor(wD({1, 0})) ==
          WeightMultiset{{wD({h3, h}), 1}, {wD({h3, -h}), 1}, {wD({h, h}), 1}, {wD({h, -h}), 1}});
    CHECK(spin_tensor(wD({0, 0})) == WeightMultiset{{wD({h, h}), 1}, {wD({h, -h}), 1}});
    CHECK(spin_tensor(wA({1, 0}), 1) == WeightMultiset{{wA({h3, -h}), 1}, {wA({h, h}), 1}});
    CHECK(spin_tensor(wD({1, 0})) == spin_tensor_oracle(wD({1, 0})));
    CHECK(spin_tensor(wA({1, 0}), 1) == spin_tensor_oracle(wA({1, 0}), 1));
}

TEST_CASE("denominator identity") {
    CHECK(check_denominator_identity(2, 0));
    CHECK(check_denominator_identity(3, 1));
    CHECK(check_denominator_identity(4, 1));
    auto r = denominator_identity(2, 0);
    CHECK(r.lambda == wD({h, 0}));
    CHECK(r.lambda_prime == wB({1, h}));
}
