#pragma once

#include "laxlog/coalgebra.hpp"
#include "laxlog/resolution.hpp"
#include "laxlog/saturation.hpp"

namespace laxlog {

struct SuiteReport {
    size_t checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Laxness, exhaustively: every arrow n -> m with n, m <= max_context and
// term depth <= term_depth, applied to every atom over m from the bounded
// atom enumeration, must satisfy check_lax at tree depth k.
SuiteReport check_lax_suite(const Program& program, int max_context, int term_depth, int k);

// Injection strictness, exhaustively: every injection n -> m with
// m <= max_target, applied to every atom over n.
SuiteReport check_inj_suite(const Program& program, int max_target, int atom_depth, int k);

// The distributive law: agreement of step_ext with the raw-step/dist_law
// factorization on the bounded atom slice, and naturality of dist_law along
// random injections.
SuiteReport check_dist_suite(const Program& program, int sample_count, uint64_t seed);

// The two routes to the approximant: the one-step iteration against the
// depth-k derivation tree, for every atom in the bounded slice and every
// level up to max_level. Plain mode is exercised too when the program has no
// existential variables.
SuiteReport check_oracle_suite(const Program& program, int max_context, int atom_depth,
                               int max_level);

// Answer soundness for every atom in the bounded slice of the program's
// signature: SLD answers instantiate to term-matching-provable goals.
SuiteReport check_bridge_suite(const Program& program, int max_context, int atom_depth,
                               int fuel);

}  // namespace laxlog
