#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "biq/biquandle.hpp"
#include "common.hpp"

using namespace biq;

TEST_CASE("axioms hold on all fixtures") {
    CHECK(check_axioms(fixtures::bq3()).valid());
    CHECK(check_axioms(fixtures::latin4()).valid());
    CHECK(check_axioms(fixtures::cyc6()).valid());
    for (int n = 1; n <= 5; ++n) CHECK(check_axioms(trivial_quandle(n)).valid());
}

TEST_CASE("single-entry mutations are rejected with the right axiom") {
    auto B = fixtures::bq3();
    const int n = B.n();
    std::mt19937_64 rng(7);
    int tried = 0;
    while (tried < 20) {
        std::vector<int> rows(size_t(n) * 2 * n);
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                rows[size_t(x - 1) * 2 * n + (y - 1)] = B.star(x, y);
                rows[size_t(x - 1) * 2 * n + n + (y - 1)] = B.circ(x, y);
            }
        size_t pos = rng() % rows.size();
        int delta = 1 + int(rng() % (n - 1));
        rows[pos] = (rows[pos] - 1 + delta) % n + 1;
        auto rep = check_axioms(FiniteBiquandle::from_matrix(n, rows));
        if (rep.valid()) continue;  // some mutations could be another biquandle
        ++tried;
        for (const auto& v : rep.violations) {
            CHECK(v.axiom >= 1);
            CHECK(v.axiom <= 3);
        }
    }
    CHECK(tried == 20);
}

TEST_CASE("S map and its inverse are mutually inverse bijections") {
    for (const auto& B : {fixtures::bq3(), fixtures::latin4(), fixtures::cyc6()}) {
        const int n = B.n();
        SInverse inv(B);
        std::set<std::pair<int, int>> image;
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                auto [u, v] = s_map(B, x, y);
                image.insert({u, v});
                auto [x2, y2] = inv(u, v);
                CHECK(x2 == x);
                CHECK(y2 == y);
            }
        CHECK(int(image.size()) == n * n);
    }
}

TEST_CASE("automorphism sets are groups and match a direct filter") {
    for (const auto& B : {fixtures::bq3(), fixtures::latin4()}) {
        auto fs = automorphisms(B);
        // every listed permutation is a homomorphism, direct check
        for (const auto& f : fs) CHECK(is_homomorphism(B, B, f.img));
        // closure under composition
        for (const auto& f : fs)
            for (const auto& g : fs) {
                Permutation h = f.compose(g);
                CHECK(std::count(fs.begin(), fs.end(), h) == 1);
            }
        // identity present
        CHECK(std::count(fs.begin(), fs.end(), Permutation::identity(B.n())) == 1);
    }
}

TEST_CASE("admissible automorphisms of the 3-element fixture are id and (1 2)") {
    auto fs = admissible_automorphisms(fixtures::bq3());
    REQUIRE(fs.size() == 2);
    std::set<std::string> got{fs[0].serialize(), fs[1].serialize()};
    CHECK(got == std::set<std::string>{"1 2 3", "2 1 3"});
}

TEST_CASE("admissibility identity x*y = x o f(y)") {
    struct Case { FiniteBiquandle B; Permutation f; };
    for (const auto& [B, f] : {Case{fixtures::bq3(), fixtures::bq3_f()},
                               Case{fixtures::cyc6(), fixtures::cyc6_f()},
                               Case{fixtures::triv4(), fixtures::triv4_f()}}) {
        REQUIRE(is_admissible(B, f));
        for (int x = 1; x <= B.n(); ++x)
            for (int y = 1; y <= B.n(); ++y) CHECK(B.star(x, y) == B.circ(x, f(y)));
    }
}

TEST_CASE("every permutation is admissible for the trivial quandle") {
    auto B = trivial_quandle(3);
    CHECK(admissible_automorphisms(B).size() == 6);
}

TEST_CASE("latin classification") {
    CHECK(latin_class(fixtures::latin4()).cls == LatinClass::Latin);
    CHECK(latin_class(fixtures::bq3()).cls == LatinClass::Neither);  // row 3 constant
    CHECK(latin_class(fixtures::cyc6()).cls == LatinClass::Neither);
}

TEST_CASE("table parse/serialize round trip") {
    for (const auto& B : {fixtures::bq3(), fixtures::latin4(), fixtures::cyc6()}) {
        auto C = FiniteBiquandle::parse(B.serialize());
        CHECK(C.n() == B.n());
        for (int x = 1; x <= B.n(); ++x)
            for (int y = 1; y <= B.n(); ++y) {
                CHECK(C.star(x, y) == B.star(x, y));
                CHECK(C.circ(x, y) == B.circ(x, y));
            }
    }
}

TEST_CASE("malformed tables are rejected") {
    CHECK_THROWS(FiniteBiquandle::parse("0\n"));
    CHECK_THROWS(FiniteBiquandle::parse("2\n1 2 1 2\n"));          // truncated
    CHECK_THROWS(FiniteBiquandle::parse("2\n1 2 1 2\n3 1 2 1\n")); // out of range
}
