#include "doctest.h"

#include "biq/diagram.hpp"
#include "common.hpp"

using namespace biq;

TEST_CASE("parse/serialize round trip") {
    for (const auto& code : fixtures::seed_codes()) {
        auto D = parse_diagram(code);
        CHECK(validate(D).empty());
        auto E = parse_diagram(serialize_diagram(D));
        CHECK(equal_up_to_renaming(D, E));
    }
}

TEST_CASE("zero-event component syntax") {
    auto D = parse_diagram("0");
    CHECK(D.comps.size() == 1);
    CHECK(D.comps[0].empty());
    CHECK(validate(D).empty());
    CHECK(semi_arc_count(D) == 1);  // the whole circle is one semi-arc
    auto E = parse_diagram("u1+,o1+;0");
    CHECK(E.comps.size() == 2);
    CHECK(validate(E).empty());
}

TEST_CASE("validation rejects malformed codes") {
    // crossing appearing once
    CHECK(!validate(parse_diagram("u1+")).empty());
    // crossing appearing with two under halves
    CHECK(!validate(parse_diagram("u1+,u1+")).empty());
    // sign mismatch between the two halves
    CHECK(!validate(parse_diagram("u1+,o1-")).empty());
    // crossing appearing three times
    CHECK(!validate(parse_diagram("u1+,o1+;o1+,u2+,o2+")).empty());
    // bad tokens fail at parse time
    CHECK_THROWS(parse_diagram("u1"));
    CHECK_THROWS(parse_diagram("x1+"));
    CHECK_THROWS(parse_diagram("a0"));
    CHECK_THROWS(parse_diagram(""));
}

TEST_CASE("writhe, winding and semi-arc counts") {
    auto hopf = parse_diagram(fixtures::kHopf);
    CHECK(writhe(hopf) == 2);
    CHECK(total_winding(hopf) == 0);
    CHECK(semi_arc_count(hopf) == 4);

    auto D = parse_diagram("u1+,a+,o2+,u3-,o1+,u2+,a-,o3-");
    CHECK(writhe(D) == 1);  // +1 +1 -1 over the three crossings
    CHECK(winding(D, 0) == 0);
    CHECK(semi_arc_count(D) == 8);

    auto A = parse_diagram("a+,a+,a-");
    CHECK(writhe(A) == 0);
    CHECK(winding(A, 0) == 1);
    CHECK(total_winding(A) == 1);
}

TEST_CASE("crossing signs map") {
    auto D = parse_diagram("u1+,a+,o2+,u3-,o1+,u2+,a-,o3-");
    auto s = crossing_signs(D);
    REQUIRE(s.size() == 3);
    CHECK(s.at(1) == 1);
    CHECK(s.at(2) == 1);
    CHECK(s.at(3) == -1);
}

TEST_CASE("canonical renumbering is stable and name-insensitive") {
    auto D = parse_diagram("u7+,o9+;o7+,u9+");
    auto C = canonical_renumbering(D);
    CHECK(serialize_diagram(C) == fixtures::kHopf);
    CHECK(equal_up_to_renaming(D, parse_diagram(fixtures::kHopf)));
    CHECK(!equal_up_to_renaming(D, parse_diagram("u1-,o2-;o1-,u2-")));
}

TEST_CASE("semi-arc enumeration covers each component cyclically") {
    auto D = parse_diagram("u1+,a+,o2+,u3-,o1+,u2+,a-,o3-;0");
    auto arcs = semi_arcs(D);
    CHECK(arcs.size() == 9);
    int on_first = 0;
    for (const auto& a : arcs) on_first += a.comp == 0 ? 1 : 0;
    CHECK(on_first == 8);
}
