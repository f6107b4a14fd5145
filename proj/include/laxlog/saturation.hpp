#pragma once

#include "laxlog/coalgebra.hpp"

namespace laxlog {

struct SatBounds {
    int max_context = 2;  // largest source context enumerated
    int max_depth = 2;    // largest term depth enumerated
};

// The bounded saturated value of an atom: the one-step image of every
// enumerated substitution instance, indexed by the substitution. Entries are
// kept in enumeration order (source context ascending, then the substitution
// enumeration order).
struct SaturatedValue {
    Atom root;
    SatBounds bounds;
    std::vector<std::pair<Substitution, StepValue>> table;

    const StepValue* find(const Substitution& s) const;
    StepValue* find(const Substitution& s);
};

// table(f) = step_ext(apply(f, root)) for every f: m -> n with m <=
// bounds.max_context and term depth <= bounds.max_depth. Requires
// bounds.max_context >= the root's context so the identity entry exists.
SaturatedValue saturate(const Program& program, const Atom& root, SatBounds bounds);

// Evaluation at the identity substitution.
const StepValue& desaturate(const SaturatedValue& sat);

struct CoherenceReport {
    size_t pairs_checked = 0;
    struct Violation {
        std::string f;
        std::string g;
        std::string entry;   // key of the offending composite
        std::string detail;
    };
    // At most one violation is recorded per offending table entry.
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// For every table entry f: m -> n with m and term depth within `gbounds`,
// and every arrow g into m enumerated at `gbounds`, checks that the g-image
// of table(f) is dominated by table(g;f) whenever the composite is itself a
// table entry; when g is a variable-renaming arrow of an injection, equality
// is demanded.
CoherenceReport check_coherence(const SaturatedValue& sat, SatBounds gbounds,
                                const Signature& sig);

}  // namespace laxlog
