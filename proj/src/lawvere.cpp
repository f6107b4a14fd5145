#include "laxlog/lawvere.hpp"

#include <algorithm>
#include <sstream>

namespace laxlog {

bool Substitution::is_identity() const {
    if (source != target) return false;
    for (int i = 0; i < target; ++i)
        if (!(assignment[i].is_var() && assignment[i].var == i)) return false;
    return true;
}

std::string Substitution::to_string(int bound) const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int i = 0; i < target; ++i) {
        if (assignment[i].is_var() && assignment[i].var == i) continue;
        if (!first) out << ", ";
        first = false;
        out << 'x' << (i + 1) << "->" << format_term(assignment[i], bound);
    }
    out << '}';
    return out.str();
}

std::string Substitution::key_string() const {
    return std::to_string(source) + "->" + std::to_string(target) + ":" + to_string();
}

Substitution identity_subst(int n) {
    Substitution s;
    s.source = s.target = n;
    for (int i = 0; i < n; ++i) s.assignment.push_back(Term::variable(i));
    return s;
}

Term apply(const Substitution& s, const Term& t) {
    if (t.is_var()) {
        if (t.var >= s.target)
            throw context_error("apply: variable outside the substitution's target context");
        return s.assignment[t.var];
    }
    Term out;
    out.sym = t.sym;
    out.args.reserve(t.args.size());
    for (const Term& a : t.args) out.args.push_back(apply(s, a));
    return out;
}

Atom apply(const Substitution& s, const Atom& a) {
    if (a.ctx != s.target)
        throw context_error("apply: atom context " + std::to_string(a.ctx) +
                            " does not match substitution target " + std::to_string(s.target));
    Atom out;
    out.pred = a.pred;
    out.ctx = s.source;
    out.args.reserve(a.args.size());
    for (const Term& t : a.args) out.args.push_back(apply(s, t));
    return out;
}

Substitution compose(const Substitution& g, const Substitution& f) {
    if (g.target != f.source)
        throw context_error("compose: inner contexts do not align");
    Substitution out;
    out.source = g.source;
    out.target = f.target;
    out.assignment.reserve(f.assignment.size());
    for (const Term& t : f.assignment) out.assignment.push_back(apply(g, t));
    return out;
}

Substitution pad(const Substitution& s, int k) {
    Substitution out = s;
    out.source += k;
    out.target += k;
    for (int i = 0; i < k; ++i) out.assignment.push_back(Term::variable(s.source + i));
    return out;
}

Injection identity_injection(int n) {
    Injection i;
    i.source = i.target = n;
    for (int v = 0; v < n; ++v) i.map.push_back(v);
    return i;
}

Injection canonical_inclusion(int n, int m) {
    if (m < n) throw context_error("canonical_inclusion: target smaller than source");
    Injection i;
    i.source = n;
    i.target = m;
    for (int v = 0; v < n; ++v) i.map.push_back(v);
    return i;
}

Injection compose(const Injection& j, const Injection& i) {
    if (i.target != j.source) throw context_error("compose: injections do not align");
    Injection out;
    out.source = i.source;
    out.target = j.target;
    for (int v : i.map) out.map.push_back(j.map[v]);
    return out;
}

Substitution injection_subst(const Injection& i) {
    Substitution s;
    s.source = i.target;
    s.target = i.source;
    for (int j = 0; j < i.source; ++j) s.assignment.push_back(Term::variable(i.map[j]));
    return s;
}

std::vector<Injection> enumerate_injections(int n, int m) {
    std::vector<Injection> out;
    if (n > m) return out;
    std::vector<int> picked;
    std::vector<bool> used(m, false);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(picked.size()) == n) {
            out.push_back(Injection{n, m, picked});
            return;
        }
        for (int v = 0; v < m; ++v) {
            if (used[v]) continue;
            used[v] = true;
            picked.push_back(v);
            self(self);
            picked.pop_back();
            used[v] = false;
        }
    };
    rec(rec);
    return out;
}

std::vector<Substitution> enumerate_substitutions(const Signature& sig, int n, int m, int d) {
    std::vector<Term> terms = enumerate_terms(sig, n, d);
    std::vector<Substitution> out;
    if (m == 0) {
        Substitution s;
        s.source = n;
        s.target = 0;
        out.push_back(std::move(s));
        return out;
    }
    if (terms.empty()) return out;
    std::vector<size_t> idx(m, 0);
    while (true) {
        Substitution s;
        s.source = n;
        s.target = m;
        for (int i = 0; i < m; ++i) s.assignment.push_back(terms[idx[i]]);
        out.push_back(std::move(s));
        int pos = m - 1;
        while (pos >= 0 && ++idx[pos] == terms.size()) idx[pos--] = 0;
        if (pos < 0) break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Matching and unification
// ---------------------------------------------------------------------------

namespace {

bool match_term(const Term& pattern, const Term& target, std::vector<std::optional<Term>>& bind) {
    if (pattern.is_var()) {
        auto& slot = bind[pattern.var];
        if (slot) return *slot == target;
        slot = target;
        return true;
    }
    if (target.is_var()) return false;
    if (pattern.sym != target.sym || pattern.args.size() != target.args.size()) return false;
    for (size_t i = 0; i < pattern.args.size(); ++i)
        if (!match_term(pattern.args[i], target.args[i], bind)) return false;
    return true;
}

// Bindings for the pattern's variables, or nullopt when no match exists.
// Variables without a binding are left unset for the caller to resolve.
std::optional<std::vector<std::optional<Term>>> match_bindings(const Atom& pattern,
                                                               const Atom& target) {
    if (pattern.pred != target.pred || pattern.args.size() != target.args.size())
        return std::nullopt;
    std::vector<std::optional<Term>> bind(pattern.ctx);
    for (size_t i = 0; i < pattern.args.size(); ++i)
        if (!match_term(pattern.args[i], target.args[i], bind)) return std::nullopt;
    return bind;
}

}  // namespace

std::optional<Substitution> mgm(const Atom& pattern, const Atom& target) {
    auto bind = match_bindings(pattern, target);
    if (!bind) return std::nullopt;
    Substitution s;
    s.source = target.ctx;
    s.target = pattern.ctx;
    for (int v = 0; v < pattern.ctx; ++v) {
        if ((*bind)[v]) {
            s.assignment.push_back(std::move(*(*bind)[v]));
        } else if (v < target.ctx) {
            s.assignment.push_back(Term::variable(v));
        } else {
            return std::nullopt;  // no slot for the unconstrained variable
        }
    }
    return s;
}

namespace {

// Union-find-free unification: `bind[v]` is the term variable v resolved to
// so far (possibly another variable). `walk` chases variable bindings.
struct Unifier {
    std::vector<std::optional<Term>> bind;

    Term walk(Term t) const {
        while (t.is_var() && bind[t.var]) t = *bind[t.var];
        return t;
    }

    bool occurs(int v, const Term& t) const {
        Term w = walk(t);
        if (w.is_var()) return w.var == v;
        for (const Term& a : w.args)
            if (occurs(v, a)) return true;
        return false;
    }

    bool unify(const Term& a, const Term& b) {
        Term x = walk(a), y = walk(b);
        if (x.is_var() && y.is_var()) {
            if (x.var == y.var) return true;
            // Bind the larger index to the smaller so query variables survive.
            if (x.var < y.var) std::swap(x, y);
            bind[x.var] = y;
            return true;
        }
        if (x.is_var() || y.is_var()) {
            if (!x.is_var()) std::swap(x, y);
            if (occurs(x.var, y)) return false;
            bind[x.var] = y;
            return true;
        }
        if (x.sym != y.sym || x.args.size() != y.args.size()) return false;
        for (size_t i = 0; i < x.args.size(); ++i)
            if (!unify(x.args[i], y.args[i])) return false;
        return true;
    }

    // Fully resolve a term through the current bindings.
    Term resolve(const Term& t) const {
        Term w = walk(t);
        if (w.is_var()) return w;
        Term out;
        out.sym = w.sym;
        out.args.reserve(w.args.size());
        for (const Term& a : w.args) out.args.push_back(resolve(a));
        return out;
    }
};

}  // namespace

std::optional<Substitution> mgu(const Atom& a, const Atom& b) {
    if (a.ctx != b.ctx) throw context_error("mgu: atoms over different contexts");
    if (a.pred != b.pred || a.args.size() != b.args.size()) return std::nullopt;
    Unifier u;
    u.bind.resize(a.ctx);
    for (size_t i = 0; i < a.args.size(); ++i)
        if (!u.unify(a.args[i], b.args[i])) return std::nullopt;
    Substitution s;
    s.source = s.target = a.ctx;
    for (int v = 0; v < a.ctx; ++v) s.assignment.push_back(u.resolve(Term::variable(v)));
    return s;
}

std::optional<ClauseMatch> match_clause(const Clause& clause, size_t index, const Atom& goal) {
    auto bind = match_bindings(clause.head, goal);
    if (!bind) return std::nullopt;

    ClauseMatch m;
    m.clause_index = index;
    m.matcher.target = clause.ctx;
    int fresh = 0;
    for (int v = 0; v < clause.ctx; ++v) {
        if ((*bind)[v])
            m.matcher.assignment.push_back(std::move(*(*bind)[v]));
        else
            m.matcher.assignment.push_back(Term::variable(goal.ctx + fresh++));
    }
    m.fresh = fresh;
    m.matcher.source = goal.ctx + fresh;

    for (const Atom& b : clause.body) {
        Atom instantiated = apply(m.matcher, b);
        if (std::find(m.body.begin(), m.body.end(), instantiated) == m.body.end())
            m.body.push_back(std::move(instantiated));
    }
    return m;
}

std::vector<ClauseMatch> matching_clauses(const Program& program, const Atom& goal) {
    std::vector<ClauseMatch> out;
    for (size_t i = 0; i < program.clauses.size(); ++i)
        if (auto m = match_clause(program.clauses[i], i, goal)) out.push_back(std::move(*m));
    return out;
}

}  // namespace laxlog
