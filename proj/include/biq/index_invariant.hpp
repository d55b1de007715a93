#pragma once

// Index-type invariant.  The pair group G is generated by all ordered pairs
// (x,y) in X^2 subject to
//   (x,x) = 0,  (x,y) + (y, f^{-1}(x)) = 0,
//   (x,y) = (x*z, y*z),  (y,z) = (yox, zox),  (x,z) = (x*y, zoy);
// computations happen in its abelianization via Smith normal form.  Each
// crossing gets Ind(c) = sum over colorings of the projected defining pair,
// and the profile counts crossings by index value, sign-weighted, with a
// writhe correction at the special element Col * [identity].

#include <functional>
#include <map>
#include <sstream>

#include "abelian.hpp"
#include "coloring.hpp"

namespace biq {

struct GxAbelianization {
    AbelianGroup group;
    // projection of generator (x,y); generators in lexicographic (x,y) order
    std::vector<GroupElement> gen_proj;  // (x-1)*n + (y-1)
    int n = 0;

    const GroupElement& project_pair(int x, int y) const {
        return gen_proj[size_t(x - 1) * n + (y - 1)];
    }
};

inline GxAbelianization gx_abelianization(const FiniteBiquandle& B, const Permutation& f) {
    if (!is_admissible(B, f))
        throw ContractError("gx: f is not an admissible automorphism");
    const int n = B.n();
    const int g = n * n;
    auto idx = [&](int x, int y) { return (x - 1) * n + (y - 1); };
    Permutation finv = f.inverse();
    std::vector<std::vector<long long>> relators;
    auto rel2 = [&](int a, int b, int sb) {
        std::vector<long long> r(g, 0);
        r[a] += 1;
        r[b] += sb;
        relators.push_back(std::move(r));
    };
    for (int x = 1; x <= n; ++x) {
        std::vector<long long> r(g, 0);
        r[idx(x, x)] = 1;
        relators.push_back(std::move(r));
        for (int y = 1; y <= n; ++y) {
            rel2(idx(x, y), idx(y, finv(x)), +1);
            for (int z = 1; z <= n; ++z) {
                rel2(idx(x, y), idx(B.star(x, z), B.star(y, z)), -1);
                rel2(idx(y, z), idx(B.circ(y, x), B.circ(z, x)), -1);
                rel2(idx(x, z), idx(B.star(x, y), B.circ(z, y)), -1);
            }
        }
    }
    IntMatrix M(g, static_cast<int>(relators.size()));
    for (size_t j = 0; j < relators.size(); ++j)
        for (int i = 0; i < g; ++i) M.at(i, static_cast<int>(j)) = Int(static_cast<long>(relators[j][i]));
    QuotientPresentation q = quotient_by_columns(M);
    GxAbelianization out;
    out.group = q.group;
    out.n = n;
    out.gen_proj.resize(g);
    for (int i = 0; i < g; ++i) {
        std::vector<long long> e(g, 0);
        e[i] = 1;
        out.gen_proj[i] = q.project(e);
    }
    // orient each free coordinate so the first generator (lexicographic) with
    // a nonzero projection there projects positively
    for (int c = 0; c < out.group.rank; ++c) {
        for (int i = 0; i < g; ++i) {
            if (out.gen_proj[i][c] == 0) continue;
            if (out.gen_proj[i][c] < 0)
                for (int j = 0; j < g; ++j) out.gen_proj[j][c] = -out.gen_proj[j][c];
            break;
        }
    }
    return out;
}

// Ind(c) for every crossing of D; with zero colorings every crossing maps to
// the zero group-ring element.
inline std::map<int, GroupRingElement> crossing_indices(const FiniteBiquandle& B,
                                                        const Permutation& f,
                                                        const ArrowedDiagram& D,
                                                        const GxAbelianization& gx) {
    if (!is_admissible(B, f))
        throw ContractError("crossing_indices: f is not an admissible automorphism");
    std::map<int, GroupRingElement> out;
    for (const auto& comp : D.comps)
        for (const auto& ev : comp)
            if (ev.is_half()) out[ev.crossing];  // ensure presence
    for (const auto& col : solve_unchecked(B, f, D))
        for (const auto& [cid, pr] : col.pairs)
            out[cid].add_term(gx.project_pair(pr.first, pr.second), 1);
    return out;
}

inline std::map<int, GroupRingElement> crossing_indices(const FiniteBiquandle& B,
                                                        const Permutation& f,
                                                        const ArrowedDiagram& D) {
    return crossing_indices(B, f, D, gx_abelianization(B, f));
}

struct IndexProfile {
    std::map<GroupRingElement, long long> a;  // zero values omitted
    long long col = 0;
    int writhe = 0;
    AbelianGroup group;

    bool operator==(const IndexProfile& o) const { return a == o.a; }
};

inline IndexProfile index_profile(const FiniteBiquandle& B, const Permutation& f,
                                  const ArrowedDiagram& D, const GxAbelianization& gx) {
    IndexProfile p;
    p.writhe = writhe(D);
    p.group = gx.group;
    auto inds = crossing_indices(B, f, D, gx);
    auto signs = crossing_signs(D);
    for (const auto& [cid, g] : inds) p.a[g] += signs.at(cid);
    p.col = coloring_count(B, f, D);
    GroupRingElement special = group_ring_single(gx.group, zero_element(gx.group), p.col);
    if (p.col == 0) special = GroupRingElement{};
    p.a[special] -= p.writhe;
    for (auto it = p.a.begin(); it != p.a.end();)
        it = it->second == 0 ? p.a.erase(it) : std::next(it);
    return p;
}

inline IndexProfile index_profile(const FiniteBiquandle& B, const Permutation& f,
                                  const ArrowedDiagram& D) {
    return index_profile(B, f, D, gx_abelianization(B, f));
}

inline std::string serialize_profile(const IndexProfile& p) {
    std::ostringstream os;
    os << "# Col = " << p.col << ", writhe = " << p.writhe << ", group = "
       << p.group.describe() << "\n";
    for (const auto& [g, ag] : p.a)
        os << "a_g = " << ag << " @ g = " << g.serialize() << "\n";
    return os.str();
}

}  // namespace biq
