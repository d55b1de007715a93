// Command-line front end: biquandle checks, coloring counts, state sums,
// cohomology, pair-group abelianization, index profiles, move application and
// the invariance fuzz harness.  One computation per invocation; deterministic
// line-oriented output.
//
// Exit codes: 0 success, 1 fuzz failure, 2 parse/format error,
// 3 precondition violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "biq/biquandle.hpp"
#include "biq/coloring.hpp"
#include "biq/diagram.hpp"
#include "biq/fuzz.hpp"
#include "biq/homology.hpp"
#include "biq/index_invariant.hpp"
#include "biq/moves.hpp"
#include "biq/state_sum.hpp"

namespace {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

biq::FiniteBiquandle load_biquandle(const std::string& path) {
    try {
        return biq::FiniteBiquandle::parse(read_file(path));
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
}

biq::Permutation load_perm(const std::string& text, int n) {
    try {
        return biq::Permutation::parse(text, n);
    } catch (const std::exception& e) {
        throw FormatError(e.what());
    }
}

biq::ArrowedDiagram load_diagram(const std::string& path) {
    biq::ArrowedDiagram D;
    try {
        D = biq::parse_diagram(read_file(path));
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
    auto errs = biq::validate(D);
    if (!errs.empty()) throw FormatError(path + ": " + errs.front());
    return D;
}

biq::Cocycle2 load_cocycle(const std::string& path, int n) {
    try {
        return biq::Cocycle2::parse(read_file(path), n);
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void require_valid(const biq::FiniteBiquandle& B) {
    if (!biq::check_axioms(B).valid())
        throw biq::ContractError("input table is not a valid biquandle");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"biquandle invariants toolkit"};
    app.require_subcommand(1);

    std::string bq_path, perm_text, phi_path, dgm_path, move_kind, site_spec, coeffs = "Z";
    int degree = 2;
    int steps = 8, trials = 100;
    uint64_t seed = 1;
    bool admissible_only = false;
    std::vector<std::string> fuzz_inputs;

    auto* c_check = app.add_subcommand("check-biquandle", "verify the axioms of a table");
    c_check->add_option("biquandle", bq_path)->required();

    auto* c_auto = app.add_subcommand("automorphisms", "list automorphisms");
    c_auto->add_option("biquandle", bq_path)->required();
    c_auto->add_flag("--admissible", admissible_only, "only those with x*y = x o f(y)");

    auto* c_count = app.add_subcommand("color-count", "number of colorings");
    c_count->add_option("biquandle", bq_path)->required();
    c_count->add_option("perm", perm_text)->required();
    c_count->add_option("diagram", dgm_path)->required();

    auto* c_cols = app.add_subcommand("colorings", "list colorings");
    c_cols->add_option("biquandle", bq_path)->required();
    c_cols->add_option("perm", perm_text)->required();
    c_cols->add_option("diagram", dgm_path)->required();

    auto* c_ss = app.add_subcommand("state-sum", "cocycle state sum");
    c_ss->add_option("biquandle", bq_path)->required();
    c_ss->add_option("perm", perm_text)->required();
    c_ss->add_option("cocycle", phi_path)->required();
    c_ss->add_option("diagram", dgm_path)->required();

    auto* c_cc = app.add_subcommand("check-cocycle", "cocycle and arrow-slide conditions");
    c_cc->add_option("biquandle", bq_path)->required();
    c_cc->add_option("perm", perm_text)->required();
    c_cc->add_option("cocycle", phi_path)->required();

    auto* c_cb = app.add_subcommand("is-coboundary", "solve delta1 psi = phi");
    c_cb->add_option("biquandle", bq_path)->required();
    c_cb->add_option("cocycle", phi_path)->required();

    auto* c_coh = app.add_subcommand("cohomology", "H^n of the nondegenerate complex");
    c_coh->add_option("biquandle", bq_path)->required();
    c_coh->add_option("--degree", degree, "degree n in {1,2,3}")->required();
    c_coh->add_option("--coeffs", coeffs, "Z or Z%m");

    auto* c_gx = app.add_subcommand("gx", "abelianized pair group and projections");
    c_gx->add_option("biquandle", bq_path)->required();
    c_gx->add_option("perm", perm_text)->required();

    auto* c_ip = app.add_subcommand("index-profile", "crossing index profile");
    c_ip->add_option("biquandle", bq_path)->required();
    c_ip->add_option("perm", perm_text)->required();
    c_ip->add_option("diagram", dgm_path)->required();

    auto* c_mv = app.add_subcommand("apply-move", "apply one move at a site");
    c_mv->add_option("diagram", dgm_path)->required();
    c_mv->add_option("--move", move_kind, "R1+|R1-|R2+|R2-|R3|O4+|O4-|O5")->required();
    c_mv->add_option("--site", site_spec, "comma-separated site arguments")->required();

    auto* c_fz = app.add_subcommand("fuzz", "random-move invariance check");
    c_fz->add_option("inputs", fuzz_inputs, "BIQUANDLE PERM [COCYCLE] DIAGRAM")
        ->expected(3, 4);
    c_fz->add_option("--steps", steps, "moves per trial");
    c_fz->add_option("--trials", trials, "number of trials");
    c_fz->add_option("--seed", seed, "base seed; trial i uses seed+i");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (*c_check) {
            auto B = load_biquandle(bq_path);
            auto rep = biq::check_axioms(B);
            if (rep.valid()) {
                std::cout << "valid\n";
            } else {
                for (const auto& v : rep.violations) {
                    std::cout << "axiom " << v.axiom << " violated";
                    std::cout << " at (";
                    for (int i = 0; i < 3; ++i)
                        if (v.witness[i]) std::cout << (i ? "," : "") << v.witness[i];
                    std::cout << "): " << v.detail << "\n";
                }
            }
        } else if (*c_auto) {
            auto B = load_biquandle(bq_path);
            require_valid(B);
            auto fs = admissible_only ? biq::admissible_automorphisms(B)
                                      : biq::automorphisms(B);
            for (const auto& f : fs) std::cout << f.serialize() << "\n";
        } else if (*c_count || *c_cols) {
            auto B = load_biquandle(bq_path);
            require_valid(B);
            auto f = load_perm(perm_text, B.n());
            auto D = load_diagram(dgm_path);
            auto cols = biq::solve(B, f, D);
            if (*c_count) {
                std::cout << cols.size() << "\n";
            } else {
                for (const auto& c : cols) {
                    for (size_t i = 0; i < c.arcs.size(); ++i)
                        std::cout << (i ? " " : "") << c.arcs[i];
                    std::cout << "\n";
                }
            }
        } else if (*c_ss) {
            auto B = load_biquandle(bq_path);
            require_valid(B);
            auto f = load_perm(perm_text, B.n());
            auto phi = load_cocycle(phi_path, B.n());
            auto D = load_diagram(dgm_path);
            std::cout << biq::state_sum(B, f, phi, D).serialize() << "\n";
        } else if (*c_cc) {
            auto B = load_biquandle(bq_path);
            require_valid(B);
            auto f = load_perm(perm_text, B.n());
            if (!biq::is_admissible(B, f))
                throw biq::ContractError("f is not an admissible automorphism");
            auto phi = load_cocycle(phi_path, B.n());
            std::cout << "cocycle: " << (biq::is_cocycle2(B, phi) ? "yes" : "no") << "\n";
            std::cout << "omega5: " << (biq::omega5_compatible(B, f, phi) ? "yes" : "no")
                      << "\n";
        } else if (*c_cb) {
            auto B = load_biquandle(bq_path);
            require_valid(B);
            auto phi = load_cocycle(phi_path, B.n());
            auto psi = biq::is_coboundary(B, phi);
            if (!psi) {
                std::cout << "coboundary: no\n";
            } else {
                std::cout << "coboundary: yes\npsi =";
                for (long long v : *psi) std::cout << " " << v;
                std::cout << "\n";
            }
        } else if (*c_coh) {
            auto B = load_biquandle(bq_path);
            require_valid(B);
            long long m = 0;
            if (coeffs != "Z") {
                if (coeffs.rfind("Z%", 0) != 0)
                    throw FormatError("--coeffs must be Z or Z%m");
                try { m = std::stoll(coeffs.substr(2)); }
                catch (...) { throw FormatError("--coeffs: bad modulus"); }
                if (m < 2) throw FormatError("--coeffs: modulus must be >= 2");
            }
            std::cout << biq::cohomology(B, degree, m).describe() << "\n";
        } else if (*c_gx) {
            auto B = load_biquandle(bq_path);
            require_valid(B);
            auto f = load_perm(perm_text, B.n());
            auto gx = biq::gx_abelianization(B, f);
            std::cout << gx.group.describe() << "\n";
            for (int x = 1; x <= B.n(); ++x)
                for (int y = 1; y <= B.n(); ++y)
                    std::cout << "(" << x << "," << y << ") -> "
                              << biq::serialize_element(gx.project_pair(x, y)) << "\n";
        } else if (*c_ip) {
            auto B = load_biquandle(bq_path);
            require_valid(B);
            auto f = load_perm(perm_text, B.n());
            auto D = load_diagram(dgm_path);
            std::cout << biq::serialize_profile(biq::index_profile(B, f, D));
        } else if (*c_mv) {
            auto D = load_diagram(dgm_path);
            biq::MoveSpec m;
            try {
                m = biq::parse_move(move_kind + "(" + site_spec + ")");
            } catch (const std::exception& e) {
                throw FormatError(e.what());
            }
            std::cout << biq::serialize_diagram(biq::apply_move(D, m)) << "\n";
        } else if (*c_fz) {
            auto B = load_biquandle(fuzz_inputs[0]);
            require_valid(B);
            auto f = load_perm(fuzz_inputs[1], B.n());
            std::optional<biq::Cocycle2> phi;
            std::string dpath;
            if (fuzz_inputs.size() == 4) {
                phi = load_cocycle(fuzz_inputs[2], B.n());
                dpath = fuzz_inputs[3];
            } else {
                dpath = fuzz_inputs[2];
            }
            auto D = load_diagram(dpath);
            auto rep = biq::run_fuzz(B, f, phi, D, steps, trials, seed);
            if (rep.failure) {
                std::cout << "FAIL trial " << rep.failure->trial << " (seed "
                          << rep.failure->seed << "): " << rep.failure->detail << "\n";
                return 1;
            }
            std::cout << "ok: " << rep.trials_run << " trial(s), " << steps
                      << " step(s) each\n";
        }
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 2;
    } catch (const biq::ContractError& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 3;
    } catch (const biq::MoveError& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
