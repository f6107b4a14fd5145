#include "laxlog/resolution.hpp"

#include <algorithm>

namespace laxlog {

const char* to_string(TmOutcome o) {
    switch (o) {
        case TmOutcome::Proved: return "Proved";
        case TmOutcome::FailedFinite: return "FailedFinite";
        case TmOutcome::FuelExhausted: return "FuelExhausted";
    }
    return "?";
}

namespace {

// Status of one goal atom within the bounded search. `Exhausted` dominates
// `Failed` when combining conjuncts: a finite-failure verdict for the whole
// query is only honest once every branch has closed below the bound.
enum class Status { Proved, Failed, Exhausted };

struct Search {
    const Program& program;
    int fuel;

    Status prove(const Atom& goal, int depth, ProofNode* out) {
        if (depth >= fuel) return Status::Exhausted;
        std::vector<ClauseMatch> matches = matching_clauses(program, goal);
        if (matches.empty()) return Status::Failed;

        bool saw_exhausted = false;
        for (ClauseMatch& m : matches) {
            std::vector<ProofNode> children;
            Status conj = Status::Proved;
            for (const Atom& sub : m.body) {
                ProofNode child;
                Status s = prove(sub, depth + 1, out ? &child : nullptr);
                if (s == Status::Proved) {
                    if (out) children.push_back(std::move(child));
                } else if (s == Status::Exhausted) {
                    conj = Status::Exhausted;
                } else if (conj != Status::Exhausted) {
                    conj = Status::Failed;
                }
            }
            if (conj == Status::Proved) {
                if (out) {
                    out->goal = goal;
                    out->clause_index = m.clause_index;
                    out->matcher = std::move(m.matcher);
                    out->children = std::move(children);
                }
                return Status::Proved;
            }
            if (conj == Status::Exhausted) saw_exhausted = true;
        }
        return saw_exhausted ? Status::Exhausted : Status::Failed;
    }
};

}  // namespace

TmResult tm_prove(const Program& program, const Atom& goal, int fuel) {
    Search search{program, fuel};
    ProofNode proof;
    Status s = search.prove(goal, 0, &proof);
    TmResult r;
    switch (s) {
        case Status::Proved:
            r.outcome = TmOutcome::Proved;
            r.proof = std::move(proof);
            break;
        case Status::Failed:
            r.outcome = TmOutcome::FailedFinite;
            break;
        case Status::Exhausted:
            r.outcome = TmOutcome::FuelExhausted;
            break;
    }
    return r;
}

// ---------------------------------------------------------------------------
// SLD resolution
// ---------------------------------------------------------------------------

namespace {

struct SldSearch {
    const Program& program;
    int bound;
    std::vector<SldAnswer>& found;
    bool truncated = false;

    // goals: the current resolvent over context `ctx`; acc: ctx -> query ctx.
    void run(const std::vector<Atom>& goals, int ctx, const Substitution& acc, int steps) {
        if (goals.empty()) {
            if (steps == bound)  // answers at smaller depths were emitted earlier
                found.push_back(SldAnswer{acc, steps});
            return;
        }
        if (steps >= bound) {
            truncated = true;
            return;
        }
        const Atom& selected = goals.front();
        for (size_t ci = 0; ci < program.clauses.size(); ++ci) {
            const Clause& clause = program.clauses[ci];
            int ext = ctx + clause.ctx;

            // Rename apart: goal variables keep their indices, clause
            // variables are shifted past the current context.
            Substitution shift;
            shift.source = ext;
            shift.target = clause.ctx;
            for (int v = 0; v < clause.ctx; ++v)
                shift.assignment.push_back(Term::variable(ctx + v));

            Atom head = apply(shift, clause.head);
            std::optional<Substitution> sigma = mgu(widen(selected, ext), head);
            if (!sigma) continue;

            std::vector<Atom> next;
            next.reserve(goals.size() - 1 + clause.body.size());
            for (const Atom& b : clause.body) next.push_back(apply(*sigma, apply(shift, b)));
            for (size_t gi = 1; gi < goals.size(); ++gi)
                next.push_back(apply(*sigma, widen(goals[gi], ext)));

            Substitution padded = acc;
            padded.source = ext;  // terms over ctx are terms over ext
            run(next, ext, compose(*sigma, padded), steps + 1);
        }
    }
};

}  // namespace

SldSolver::SldSolver(const Program& program, std::vector<Atom> goals, int fuel)
    : program_(program), goals_(std::move(goals)), fuel_(fuel) {
    int ctx = goals_.empty() ? 0 : goals_.front().ctx;
    for (const Atom& g : goals_)
        if (g.ctx != ctx) throw context_error("sld_solve: goals over different contexts");
}

void SldSolver::run_bound(int bound) {
    buffer_.clear();
    cursor_ = 0;
    int ctx = goals_.empty() ? 0 : goals_.front().ctx;
    SldSearch search{program_, bound, buffer_};
    search.run(goals_, ctx, identity_subst(ctx), 0);
    closed_ = !search.truncated;
}

std::optional<SldAnswer> SldSolver::next() {
    while (true) {
        if (cursor_ < buffer_.size()) return buffer_[cursor_++];
        if (closed_ || bound_ >= fuel_) return std::nullopt;
        ++bound_;
        run_bound(bound_);
    }
}

std::vector<SldAnswer> sld_solve(const Program& program, const std::vector<Atom>& goals,
                                 int fuel, size_t max_answers) {
    SldSolver solver(program, goals, fuel);
    std::vector<SldAnswer> out;
    while (out.size() < max_answers) {
        auto a = solver.next();
        if (!a) break;
        out.push_back(std::move(*a));
    }
    return out;
}

BridgeReport verify_bridge(const Program& program, const Atom& goal, int fuel) {
    BridgeReport report;
    for (const SldAnswer& ans : sld_solve(program, {goal}, fuel, 64)) {
        Atom instance = apply(ans.answer, goal);
        TmResult tm = tm_prove(program, instance, ans.steps + 2);
        BridgeReport::Entry e;
        e.answer = ans.answer.to_string();
        e.instance = format_atom(instance);
        e.proved = tm.outcome == TmOutcome::Proved;
        if (!e.proved) report.violation_count++;
        report.checked.push_back(std::move(e));
    }
    return report;
}

}  // namespace laxlog
