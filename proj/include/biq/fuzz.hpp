#pragma once

// Invariance fuzzing: random move walks from seed diagrams must leave the
// coloring count, the state sum (when a cocycle is supplied) and the index
// profile unchanged.  Failures carry a greedily minimized move script that
// replays deterministically.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "index_invariant.hpp"
#include "moves.hpp"
#include "state_sum.hpp"

namespace biq {

struct FuzzFailure {
    int trial = 0;
    uint64_t seed = 0;
    std::vector<MoveSpec> script;
    std::string detail;
};

struct FuzzReport {
    int trials_run = 0;
    std::optional<FuzzFailure> failure;
};

namespace detail {

struct InvariantSnapshot {
    long long col = 0;
    std::optional<GroupRingElement> phi_value;
    std::map<GroupRingElement, long long> profile;

    bool operator==(const InvariantSnapshot& o) const {
        return col == o.col && phi_value == o.phi_value && profile == o.profile;
    }
};

inline InvariantSnapshot snapshot(const FiniteBiquandle& B, const Permutation& f,
                                  const std::optional<Cocycle2>& phi,
                                  const GxAbelianization& gx, const ArrowedDiagram& D) {
    InvariantSnapshot s;
    s.col = coloring_count(B, f, D);
    if (phi) s.phi_value = state_sum(B, f, *phi, D);
    s.profile = index_profile(B, f, D, gx).a;
    return s;
}

inline std::optional<ArrowedDiagram> replay(const ArrowedDiagram& D,
                                            const std::vector<MoveSpec>& script) {
    ArrowedDiagram cur = D;
    for (const auto& m : script) {
        try { cur = apply_move(cur, m); }
        catch (const MoveError&) { return std::nullopt; }
    }
    return cur;
}

}  // namespace detail

// Trial i (0-based) uses seed base_seed + i.
inline FuzzReport run_fuzz(const FiniteBiquandle& B, const Permutation& f,
                           const std::optional<Cocycle2>& phi, const ArrowedDiagram& D,
                           int steps, int trials, uint64_t base_seed) {
    FuzzReport rep;
    GxAbelianization gx = gx_abelianization(B, f);
    const auto base = detail::snapshot(B, f, phi, gx, D);
    for (int t = 0; t < trials; ++t) {
        uint64_t seed = base_seed + static_cast<uint64_t>(t);
        auto walk = random_equivalent_script(D, steps, seed);
        rep.trials_run = t + 1;
        auto after = detail::snapshot(B, f, phi, gx, walk.diagram);
        if (after == base) continue;
        // minimize: greedily drop moves while the mismatch persists
        std::vector<MoveSpec> script = walk.script;
        bool shrunk = true;
        while (shrunk) {
            shrunk = false;
            for (size_t i = 0; i < script.size(); ++i) {
                std::vector<MoveSpec> cand = script;
                cand.erase(cand.begin() + i);
                auto end = detail::replay(D, cand);
                if (!end) continue;
                if (!(detail::snapshot(B, f, phi, gx, *end) == base)) {
                    script = std::move(cand);
                    shrunk = true;
                    break;
                }
            }
        }
        FuzzFailure fail;
        fail.trial = t;
        fail.seed = seed;
        fail.script = script;
        std::ostringstream os;
        auto end = detail::replay(D, script);
        os << "invariant mismatch after " << script.size() << " move(s):";
        for (const auto& m : script) os << " " << serialize_move(m);
        if (end) {
            auto bad = detail::snapshot(B, f, phi, gx, *end);
            os << "\n  start:  Col=" << base.col;
            if (base.phi_value) os << " Phi=" << base.phi_value->serialize();
            os << "\n  end:    Col=" << bad.col;
            if (bad.phi_value) os << " Phi=" << bad.phi_value->serialize();
            os << "\n  end diagram: " << serialize_diagram(*end);
        }
        fail.detail = os.str();
        rep.failure = fail;
        return rep;
    }
    return rep;
}

}  // namespace biq
