#pragma once

// Finitely generated abelian groups Z^r + Z_{d1} + ... in canonical form,
// their elements as integer vectors, and the integral group ring used for
// state sums, crossing indices and profiles.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "snf.hpp"

namespace biq {

// Z^rank + Z_{torsion[0]} + ... with the divisibility chain d_i | d_{i+1}.
struct AbelianGroup {
    int rank = 0;
    std::vector<long long> torsion;  // each >= 2

    int dims() const { return rank + static_cast<int>(torsion.size()); }

    bool operator==(const AbelianGroup& o) const {
        return rank == o.rank && torsion == o.torsion;
    }

    // e.g. "Z^2 + Z_2 + Z_6", "Z^1", "0"
    std::string describe() const {
        std::ostringstream os;
        bool any = false;
        if (rank > 0) { os << "Z^" << rank; any = true; }
        for (long long d : torsion) {
            if (any) os << " + ";
            os << "Z_" << d;
            any = true;
        }
        if (!any) os << "0";
        return os.str();
    }
};

using GroupElement = std::vector<long long>;

inline GroupElement reduce_element(const AbelianGroup& G, GroupElement v) {
    if (static_cast<int>(v.size()) != G.dims())
        throw std::runtime_error("group element: wrong length");
    for (size_t i = 0; i < G.torsion.size(); ++i) {
        long long d = G.torsion[i];
        long long& c = v[G.rank + i];
        c %= d;
        if (c < 0) c += d;
    }
    return v;
}

inline GroupElement add_elements(const AbelianGroup& G, const GroupElement& a,
                                 const GroupElement& b) {
    GroupElement r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return reduce_element(G, r);
}

inline GroupElement scale_element(const AbelianGroup& G, long long k, const GroupElement& a) {
    GroupElement r(a);
    for (auto& c : r) c *= k;
    return reduce_element(G, r);
}

inline GroupElement zero_element(const AbelianGroup& G) {
    return GroupElement(G.dims(), 0);
}

inline std::string serialize_element(const GroupElement& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

// "[a,b,...]"; length checked against G.
inline GroupElement parse_element(const AbelianGroup& G, const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::runtime_error("group element: expected [..]: '" + text + "'");
    GroupElement v;
    std::istringstream is(s.substr(1, s.size() - 2));
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try { v.push_back(std::stoll(tok)); }
        catch (...) { throw std::runtime_error("group element: bad entry '" + tok + "'"); }
    }
    if (static_cast<int>(v.size()) != G.dims())
        throw std::runtime_error("group element: wrong length in '" + text + "'");
    return reduce_element(G, v);
}

// Finitely supported Z-linear combination of group elements; keys canonical,
// zero coefficients never stored.  Serialization: terms in ascending
// lexicographic key order, "c*[v]" joined by " + ".
struct GroupRingElement {
    std::map<GroupElement, long long> terms;

    bool operator==(const GroupRingElement& o) const { return terms == o.terms; }
    bool operator<(const GroupRingElement& o) const { return terms < o.terms; }
    bool is_zero() const { return terms.empty(); }

    void add_term(const GroupElement& g, long long c) {
        if (c == 0) return;
        auto it = terms.find(g);
        if (it == terms.end()) terms.emplace(g, c);
        else if ((it->second += c) == 0) terms.erase(it);
    }

    GroupRingElement plus(const GroupRingElement& o) const {
        GroupRingElement r = *this;
        for (const auto& [g, c] : o.terms) r.add_term(g, c);
        return r;
    }

    std::string serialize() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [g, c] : terms) {
            if (!first) os << " + ";
            os << c << "*" << serialize_element(g);
            first = false;
        }
        return os.str();
    }
};

inline GroupRingElement group_ring_single(const AbelianGroup& G, const GroupElement& g,
                                          long long c = 1) {
    GroupRingElement r;
    r.add_term(reduce_element(G, g), c);
    return r;
}

// Reads the canonical group type off a Smith form of a relator matrix whose
// COLUMNS span the relation lattice inside Z^g: the quotient Z^g / col(M) is
// Z^{g-rank} + sum of Z_{d_i} for the diagonal entries d_i > 1, and the class
// of x in the quotient has coordinates (U x) at the free and torsion rows.
struct QuotientPresentation {
    AbelianGroup group;
    // projection: dims x g integer matrix (rows ordered free part first,
    // then torsion in increasing d_i)
    std::vector<std::vector<long long>> proj;

    GroupElement project(const std::vector<long long>& x) const {
        GroupElement v(group.dims(), 0);
        for (int i = 0; i < group.dims(); ++i)
            for (size_t j = 0; j < x.size(); ++j) v[i] += proj[i][j] * x[j];
        return reduce_element(group, v);
    }
};

inline QuotientPresentation quotient_by_columns(const IntMatrix& M) {
    SmithForm s = smith_normal_form(M);
    QuotientPresentation q;
    const int g = M.rows;
    std::vector<int> torsion_rows, free_rows;
    for (int i = 0; i < g; ++i) {
        Int d = (i < std::min(M.rows, M.cols)) ? s.D.at(i, i) : Int(0);
        if (d == 0) free_rows.push_back(i);
        else if (d > 1) {
            torsion_rows.push_back(i);
            q.group.torsion.push_back(d.get_si());
        }
    }
    q.group.rank = static_cast<int>(free_rows.size());
    auto push_row = [&](int i) {
        std::vector<long long> row(g);
        for (int j = 0; j < g; ++j) {
            if (!s.U.at(i, j).fits_slong_p())
                throw std::runtime_error("quotient: projection entry overflow");
            row[j] = s.U.at(i, j).get_si();
        }
        q.proj.push_back(std::move(row));
    };
    for (int i : free_rows) push_row(i);
    for (int i : torsion_rows) push_row(i);
    return q;
}

}  // namespace biq
