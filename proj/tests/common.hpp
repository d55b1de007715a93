#pragma once

// Shared fixtures for the test suites.

#include <sstream>
#include <string>
#include <vector>

#include "biq/biquandle.hpp"
#include "biq/diagram.hpp"

namespace fixtures {

// 3-element biquandle: 1*2 = 2, 2*1 = 1 pattern with absorbing element 3.
inline const std::string kBq3Text =
    "3\n"
    "2 2 1 2 2 1\n"
    "1 1 2 1 1 2\n"
    "3 3 3 3 3 3\n";

inline biq::FiniteBiquandle bq3() { return biq::FiniteBiquandle::parse(kBq3Text); }
inline biq::Permutation bq3_f() { return biq::Permutation::parse("2 1 3", 3); }

// 4-element Latin-square biquandle with f = id.
inline const std::string kLatin4Text =
    "4\n"
    "1 2 4 3 1 2 4 3\n"
    "3 4 2 1 3 4 2 1\n"
    "2 1 3 4 2 1 3 4\n"
    "4 3 1 2 4 3 1 2\n";

inline biq::FiniteBiquandle latin4() { return biq::FiniteBiquandle::parse(kLatin4Text); }

inline biq::Permutation cycle_perm(int n) {
    std::ostringstream os;
    for (int i = 1; i <= n; ++i) os << (i % n) + 1 << (i == n ? "" : " ");
    return biq::Permutation::parse(os.str(), n);
}

// Trivial quandle on 4 elements with the 4-cycle automorphism.
inline biq::FiniteBiquandle triv4() { return biq::trivial_quandle(4); }
inline biq::Permutation triv4_f() { return cycle_perm(4); }

// 6-element biquandle over Z_6: x o y = x + c(y-x) with c = (3,3,0,3,3,0),
// admissible f(y) = y+1 of order 6.  Unlike the other fixtures, here circ is
// sensitive to f^2 (x o f^2(y) != x o y for some x,y), which is what makes it
// able to detect wrong-direction arrow slides.
inline biq::FiniteBiquandle cyc6() {
    const int n = 6;
    const int c[6] = {3, 3, 0, 3, 3, 0};
    std::ostringstream os;
    os << n << "\n";
    for (int x = 1; x <= n; ++x) {
        for (int y = 1; y <= n; ++y) {
            int fy = y % n + 1;
            os << ((x - 1) + c[((fy - x) % n + n) % n]) % n + 1 << " ";
        }
        for (int y = 1; y <= n; ++y)
            os << ((x - 1) + c[((y - x) % n + n) % n]) % n + 1 << " ";
        os << "\n";
    }
    return biq::FiniteBiquandle::parse(os.str());
}
inline biq::Permutation cyc6_f() { return cycle_perm(6); }

// Z-valued 2-cocycle on bq3 satisfying the arrow-slide condition.
inline const std::string kPhi3Text =
    "rank 1; torsion\n"
    "[0] [0] [1]\n"
    "[0] [0] [1]\n"
    "[-1] [-1] [0]\n";

// Positive Hopf link code.
inline const std::string kHopf = "u1+,o2+;o1+,u2+";

inline biq::ArrowedDiagram diagram(const std::string& code) {
    return biq::parse_diagram(code);
}

// Assorted valid seed diagrams exercising arrows, both signs, and multiple
// components.
inline std::vector<std::string> seed_codes() {
    return {
        "u1+,o2+;o1+,u2+",
        "u1+,a+,o2+,u3-,o1+,u2+,a-,o3-",
        "o1+,a-,u2-,a+,o3+,u1+;o2-,a-,u3+,a+",
        "a+,u1+,o1+,a-,a+,a-",
        "u1-,o2-,a+,a+,a+,a+,a-,o1-,u2-",
    };
}

}  // namespace fixtures
