#include "laxlog/generators.hpp"

#include <algorithm>

namespace laxlog {

namespace {

std::vector<std::pair<std::string, int>> function_list(const Signature& sig) {
    return {sig.functions.begin(), sig.functions.end()};
}

}  // namespace

Term random_term(Rng& rng, const Signature& sig, int ctx, int max_depth) {
    auto fns = function_list(sig);
    std::vector<size_t> nullary;
    for (size_t i = 0; i < fns.size(); ++i)
        if (fns[i].second == 0) nullary.push_back(i);

    bool leaf = max_depth == 0 || fns.empty() || rng.chance(45);
    if (leaf) {
        int options = ctx + static_cast<int>(nullary.size());
        if (options == 0) {
            if (fns.empty() || max_depth == 0)
                throw context_error("random_term: no term exists over the empty context");
            leaf = false;  // forced to build an application
        } else {
            int pick = rng.below(options);
            if (pick < ctx) return Term::variable(pick);
            return Term::app(fns[nullary[pick - ctx]].first);
        }
    }
    const auto& [name, arity] = fns[rng.below(static_cast<int>(fns.size()))];
    std::vector<Term> args;
    for (int i = 0; i < arity; ++i) args.push_back(random_term(rng, sig, ctx, max_depth - 1));
    return Term::app(name, std::move(args));
}

Atom random_atom(Rng& rng, const Signature& sig, int ctx, int max_depth) {
    if (sig.predicates.empty()) throw context_error("random_atom: empty predicate set");
    std::vector<std::pair<std::string, int>> preds(sig.predicates.begin(), sig.predicates.end());
    const auto& [name, arity] = preds[rng.below(static_cast<int>(preds.size()))];
    Atom a;
    a.pred = name;
    a.ctx = ctx;
    for (int i = 0; i < arity; ++i) a.args.push_back(random_term(rng, sig, ctx, max_depth));
    return a;
}

Atom tighten(const Atom& a) {
    Atom out = a;
    out.ctx = max_var(a) + 1;
    return out;
}

Substitution random_substitution(Rng& rng, const Signature& sig, int n, int m, int d) {
    Substitution s;
    s.source = n;
    s.target = m;
    for (int i = 0; i < m; ++i) s.assignment.push_back(random_term(rng, sig, n, d));
    return s;
}

Injection random_injection(Rng& rng, int n, int m) {
    if (n > m) throw context_error("random_injection: source larger than target");
    std::vector<int> pool;
    for (int v = 0; v < m; ++v) pool.push_back(v);
    Injection i;
    i.source = n;
    i.target = m;
    for (int j = 0; j < n; ++j) {
        int pick = rng.below(static_cast<int>(pool.size()));
        i.map.push_back(pool[pick]);
        pool.erase(pool.begin() + pick);
    }
    return i;
}

namespace {

// Renumber an atom's variables to 0..k-1 by first occurrence, so every
// context index actually occurs.
Atom contiguous(const Atom& a) {
    std::vector<int> order;
    auto renumber = [&](auto&& self, const Term& t) -> Term {
        if (t.is_var()) {
            auto it = std::find(order.begin(), order.end(), t.var);
            if (it == order.end()) {
                order.push_back(t.var);
                it = order.end() - 1;
            }
            return Term::variable(static_cast<int>(it - order.begin()));
        }
        Term out;
        out.sym = t.sym;
        for (const Term& arg : t.args) out.args.push_back(self(self, arg));
        return out;
    };
    Atom out;
    out.pred = a.pred;
    for (const Term& t : a.args) out.args.push_back(renumber(renumber, t));
    out.ctx = static_cast<int>(order.size());
    return out;
}

}  // namespace

Program random_program(Rng& rng, bool existentials) {
    Program p;
    static const char* const constants[] = {"a", "b", "c"};
    static const char* const unaries[] = {"f", "g"};
    static const char* const preds[] = {"p", "q", "r"};

    int ncon = 1 + rng.below(3);
    for (int i = 0; i < ncon; ++i) p.sig.functions[constants[i]] = 0;
    int nun = rng.below(2);
    for (int i = 0; i < nun; ++i) p.sig.functions[unaries[i]] = 1;
    int npred = 1 + rng.below(3);
    for (int i = 0; i < npred; ++i) p.sig.predicates[preds[i]] = 1 + rng.below(2);

    int nclauses = 2 + rng.below(3);
    for (int i = 0; i < nclauses; ++i) {
        // The head's variables are exactly 0..used-1 after renumbering, so a
        // body drawn over that context cannot introduce existentials.
        Atom head = contiguous(random_atom(rng, p.sig, rng.below(3), 1));
        int used = head.ctx;

        std::vector<Atom> body;
        int nbody = rng.below(3);
        for (int j = 0; j < nbody; ++j) {
            int body_ctx = existentials ? used + rng.below(2) : used;
            body.push_back(random_atom(rng, p.sig, body_ctx, 1));
        }

        int ctx = used;
        for (const Atom& b : body) ctx = std::max(ctx, max_var(b) + 1);
        head.ctx = ctx;
        for (Atom& b : body) b.ctx = ctx;

        // Existential draws may still skip an index; fall back to a fact.
        try {
            p.clauses.push_back(make_clause(head, body));
        } catch (const context_error&) {
            p.clauses.push_back(make_clause(random_atom(rng, p.sig, 0, 1), {}));
        }
    }
    return p;
}

}  // namespace laxlog
