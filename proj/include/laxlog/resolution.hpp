#pragma once

#include "laxlog/lawvere.hpp"

namespace laxlog {

// One node of a successful term-matching derivation: the goal it proves, the
// clause whose head matches it, and the matcher used. Children prove the
// instantiated body atoms.
struct ProofNode {
    Atom goal;
    size_t clause_index = 0;
    Substitution matcher;  // (goal ctx + fresh) -> clause ctx
    std::vector<ProofNode> children;
};

enum class TmOutcome { Proved, FailedFinite, FuelExhausted };

// Proved: a derivation of and-depth < fuel exists (first one in clause
// order). FailedFinite: the whole search space closed below the bound and
// every branch died at an atom with no applicable clause. FuelExhausted:
// the bound was reached somewhere before the search could close.
struct TmResult {
    TmOutcome outcome = TmOutcome::FuelExhausted;
    std::optional<ProofNode> proof;
};

TmResult tm_prove(const Program& program, const Atom& goal, int fuel);

const char* to_string(TmOutcome o);

// The answer to an SLD query: the query variables' values over the final
// derivation context, and the number of resolution steps taken.
struct SldAnswer {
    Substitution answer;  // final ctx -> query ctx
    int steps = 0;
};

// Enumerates SLD answers by iterative deepening on the number of resolution
// steps, with leftmost selection and clauses tried in program order. The
// stream ends when no derivation of at most `fuel` steps remains.
class SldSolver {
  public:
    SldSolver(const Program& program, std::vector<Atom> goals, int fuel);

    std::optional<SldAnswer> next();

  private:
    void run_bound(int bound);

    const Program& program_;
    std::vector<Atom> goals_;
    int fuel_;
    int bound_ = -1;  // step bounds 0..fuel are run in turn
    bool closed_ = false;  // search space exhausted below the last bound
    std::vector<SldAnswer> buffer_;
    size_t cursor_ = 0;
};

std::vector<SldAnswer> sld_solve(const Program& program, const std::vector<Atom>& goals,
                                 int fuel, size_t max_answers);

// For every SLD answer found within `fuel`, checks that the instantiated
// goal has a term-matching proof.
struct BridgeReport {
    struct Entry {
        std::string answer;
        std::string instance;
        bool proved = false;
    };
    std::vector<Entry> checked;
    size_t violation_count = 0;
    bool ok() const { return violation_count == 0; }
};

BridgeReport verify_bridge(const Program& program, const Atom& goal, int fuel);

}  // namespace laxlog
