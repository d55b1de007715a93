#include <random>

#include "doctest.h"

#include "biq/moves.hpp"
#include "biq/state_sum.hpp"
#include "common.hpp"

using namespace biq;

TEST_CASE("hopf link state sum over the 3-element fixture") {
    auto phi = Cocycle2::parse(fixtures::kPhi3Text, 3);
    auto v = state_sum(fixtures::bq3(), fixtures::bq3_f(), phi,
                       fixtures::diagram(fixtures::kHopf));
    GroupRingElement expect;
    expect.add_term({0}, 9);  // all nine colorings weight trivially
    CHECK(v == expect);
    CHECK(v.serialize() == "9*[0]");
}

TEST_CASE("invalid inputs are refused") {
    auto B = fixtures::bq3();
    auto f = fixtures::bq3_f();
    auto D = fixtures::diagram(fixtures::kHopf);
    // not a cocycle: break the hexagon/diagonal
    auto bad = Cocycle2::parse("rank 1; torsion\n[1] [0] [0]\n[0] [0] [0]\n[0] [0] [0]\n", 3);
    CHECK(!is_cocycle2(B, bad));
    CHECK_THROWS_AS(state_sum(B, f, bad, D), ContractError);
    // a genuine cocycle that fails the arrow-slide pairing: phi = delta1(psi)
    // with psi = (1,0,0); its omega5 defect at (x,y)=(1,3) is nonzero
    auto cob = delta1(B, AbelianGroup{1, {}}, {{1}, {0}, {0}});
    REQUIRE(is_cocycle2(B, cob));
    if (!omega5_compatible(B, f, cob))
        CHECK_THROWS_AS(state_sum(B, f, cob, D), ContractError);
    // inadmissible automorphism
    auto phi = Cocycle2::parse(fixtures::kPhi3Text, 3);
    CHECK_THROWS_AS(state_sum(B, Permutation::parse("1 3 2", 3), phi, D), ContractError);
}

TEST_CASE("zero cocycle collapses to the coloring count at the identity") {
    struct Case { FiniteBiquandle B; Permutation f; };
    std::vector<Case> cases{{fixtures::bq3(), fixtures::bq3_f()},
                            {fixtures::cyc6(), fixtures::cyc6_f()}};
    for (const auto& fx : cases) {
        auto zero = Cocycle2::zero(AbelianGroup{0, {5}}, fx.B.n());
        for (const auto& code : fixtures::seed_codes()) {
            auto D = fixtures::diagram(code);
            long long col = coloring_count(fx.B, fx.f, D);
            GroupRingElement expect;
            if (col) expect.add_term({0}, col);
            CHECK(state_sum(fx.B, fx.f, zero, D) == expect);
        }
    }
}

TEST_CASE("coboundary cocycles over a trivial quandle collapse to the count") {
    auto B = fixtures::triv4();
    auto f = fixtures::triv4_f();  // x -> x+1 mod 4
    AbelianGroup Z4{0, {4}};
    std::vector<GroupElement> psi;
    for (int x = 1; x <= 4; ++x) psi.push_back(reduce_element(Z4, {x}));
    auto phi = delta1(B, Z4, psi);
    // trivial operations make every coboundary vanish identically, so the
    // coboundary is omega5-compatible and the sum degenerates to the count
    for (const auto& g : phi.table) CHECK(g == zero_element(Z4));
    REQUIRE(omega5_compatible(B, f, phi));
    for (const auto& code : fixtures::seed_codes()) {
        auto D = fixtures::diagram(code);
        long long col = coloring_count(B, f, D);
        GroupRingElement expect;
        if (col) expect.add_term({0}, col);
        CHECK(state_sum(B, f, phi, D) == expect);
    }
}

TEST_CASE("state sum is stable along random move scripts") {
    auto B = fixtures::bq3();
    auto f = fixtures::bq3_f();
    auto phi = Cocycle2::parse(fixtures::kPhi3Text, 3);
    for (const auto& code : fixtures::seed_codes()) {
        auto D = fixtures::diagram(code);
        auto v = state_sum(B, f, phi, D);
        for (unsigned seed = 1; seed <= 4; ++seed) {
            auto walk = random_equivalent_script(D, 6, seed);
            CHECK(state_sum(B, f, phi, walk.diagram) == v);
        }
    }
}
