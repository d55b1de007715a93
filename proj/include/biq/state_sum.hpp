#pragma once

// State-sum invariant: for each coloring, each crossing contributes the
// Boltzmann weight phi(defining pair)^{sign}; the invariant is the formal sum
// over colorings of the per-coloring products, in the group ring of the
// coefficient group.  Inputs that break the invariance hypotheses (inadmissible
// f, non-cocycle or arrow-incompatible phi) are refused.

#include <map>

#include "abelian.hpp"
#include "coloring.hpp"
#include "homology.hpp"

namespace biq {

inline GroupRingElement state_sum(const FiniteBiquandle& B, const Permutation& f,
                                  const Cocycle2& phi, const ArrowedDiagram& D) {
    if (!is_admissible(B, f))
        throw ContractError("state_sum: f is not an admissible automorphism");
    if (!is_cocycle2(B, phi))
        throw ContractError("state_sum: phi is not a 2-cocycle");
    if (!omega5_compatible(B, f, phi))
        throw ContractError("state_sum: phi fails the arrow-slide condition");
    const auto signs = crossing_signs(D);
    const auto& G = phi.target;
    GroupRingElement out;
    for (const auto& col : solve_unchecked(B, f, D)) {
        GroupElement e = zero_element(G);
        for (const auto& [cid, pr] : col.pairs)
            e = add_elements(G, e, scale_element(G, signs.at(cid), phi.at(pr.first, pr.second)));
        out.add_term(e, 1);
    }
    return out;
}

}  // namespace biq
