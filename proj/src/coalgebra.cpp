#include "laxlog/coalgebra.hpp"

#include <algorithm>
#include <sstream>

namespace laxlog {

// ---------------------------------------------------------------------------
// Bodies and step values
// ---------------------------------------------------------------------------

namespace {

void first_occurrences(const Term& t, int bound, std::vector<int>& order) {
    if (t.is_var()) {
        if (t.var >= bound && std::find(order.begin(), order.end(), t.var) == order.end())
            order.push_back(t.var);
        return;
    }
    for (const Term& a : t.args) first_occurrences(a, bound, order);
}

Term renumber_term(const Term& t, int bound, const std::vector<int>& order) {
    if (t.is_var()) {
        if (t.var < bound) return t;
        auto it = std::find(order.begin(), order.end(), t.var);
        return Term::variable(bound + static_cast<int>(it - order.begin()));
    }
    Term out;
    out.sym = t.sym;
    out.args.reserve(t.args.size());
    for (const Term& a : t.args) out.args.push_back(renumber_term(a, bound, order));
    return out;
}

// Renumber the existentials of a sequence of atoms jointly, by first
// occurrence along the given order of atoms.
std::vector<Atom> renumber_jointly(const std::vector<const Atom*>& atoms, int bound, int* k_out) {
    std::vector<int> order;
    for (const Atom* a : atoms)
        for (const Term& t : a->args) first_occurrences(t, bound, order);
    std::vector<Atom> out;
    int ctx = bound + static_cast<int>(order.size());
    for (const Atom* a : atoms) {
        Atom na;
        na.pred = a->pred;
        na.ctx = ctx;
        for (const Term& t : a->args) na.args.push_back(renumber_term(t, bound, order));
        out.push_back(std::move(na));
    }
    if (k_out) *k_out = static_cast<int>(order.size());
    return out;
}

}  // namespace

Body make_body(const std::vector<Atom>& atoms, int bound) {
    std::vector<const Atom*> distinct;
    for (const Atom& a : atoms) {
        bool dup = false;
        for (const Atom* seen : distinct)
            if (*seen == a) {
                dup = true;
                break;
            }
        if (!dup) distinct.push_back(&a);
    }
    Body b;
    b.atoms = renumber_jointly(distinct, bound, &b.exist_count);
    return b;
}

std::vector<Atom> Body::key(int bound) const {
    std::vector<size_t> perm(atoms.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;

    if (atoms.size() > 6) {
        // Too many permutations; order by the per-atom canonical forms
        // instead. Ties between atoms with equal individual forms but
        // different sharing may order differently, so this key is only
        // almost canonical for very wide sets.
        std::vector<ExtAtom> classes;
        for (const Atom& a : atoms) classes.push_back(canonicalize(a, bound));
        std::sort(perm.begin(), perm.end(), [&](size_t i, size_t j) {
            if (int c = compare(classes[i], classes[j]); c != 0) return c < 0;
            return i < j;
        });
        std::vector<const Atom*> ordered;
        for (size_t i : perm) ordered.push_back(&atoms[i]);
        return renumber_jointly(ordered, bound, nullptr);
    }

    std::vector<Atom> best;
    bool have = false;
    do {
        std::vector<const Atom*> ordered;
        for (size_t i : perm) ordered.push_back(&atoms[i]);
        std::vector<Atom> candidate = renumber_jointly(ordered, bound, nullptr);
        if (!have ||
            std::lexicographical_compare(candidate.begin(), candidate.end(), best.begin(),
                                         best.end(), atom_less)) {
            best = std::move(candidate);
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<ExtAtom> Body::classes(int bound) const {
    std::vector<ExtAtom> out;
    for (const Atom& a : atoms) {
        ExtAtom e = canonicalize(a, bound);
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), ext_atom_less);
    return out;
}

std::string Body::to_string(int bound) const {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (i) out << ", ";
        out << format_atom(atoms[i], bound);
    }
    out << '}';
    return out.str();
}

std::string step_to_string(const StepValue& v, int bound) {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << v[i].to_string(bound);
    }
    out << '}';
    return out.str();
}

namespace {

std::vector<std::vector<Atom>> sorted_keys(const StepValue& v, int bound) {
    std::vector<std::vector<Atom>> keys;
    for (const Body& b : v) keys.push_back(b.key(bound));
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), atom_less);
    });
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

void dedup_step(StepValue& v, int bound) {
    StepValue out;
    std::vector<std::vector<Atom>> seen;
    for (Body& b : v) {
        std::vector<Atom> k = b.key(bound);
        if (std::find(seen.begin(), seen.end(), k) == seen.end()) {
            seen.push_back(std::move(k));
            out.push_back(std::move(b));
        }
    }
    v = std::move(out);
}

}  // namespace

bool step_equal(const StepValue& a, const StepValue& b, int bound) {
    return sorted_keys(a, bound) == sorted_keys(b, bound);
}

bool step_leq(const StepValue& a, const StepValue& b, int bound) {
    for (const Body& s : a) {
        std::vector<ExtAtom> sc = s.classes(bound);
        bool covered = false;
        for (const Body& t : b) {
            std::vector<ExtAtom> tc = t.classes(bound);
            if (std::includes(tc.begin(), tc.end(), sc.begin(), sc.end(), ext_atom_less)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

StepValue map_step_value(const Substitution& f, const StepValue& value) {
    StepValue out;
    for (const Body& b : value) {
        Substitution padded = pad(f, b.exist_count);
        std::vector<Atom> mapped;
        mapped.reserve(b.atoms.size());
        for (const Atom& a : b.atoms) mapped.push_back(apply(padded, a));
        out.push_back(make_body(mapped, f.source));
    }
    dedup_step(out, f.source);
    return out;
}

// ---------------------------------------------------------------------------
// Ground case
// ---------------------------------------------------------------------------

const std::vector<std::vector<Atom>>& GroundCoalgebra::at(const Atom& atom) const {
    static const std::vector<std::vector<Atom>> empty;
    auto it = table.find(atom);
    return it == table.end() ? empty : it->second;
}

GroundCoalgebra ground_step(const Program& program) {
    for (size_t i = 0; i < program.clauses.size(); ++i)
        if (program.clauses[i].ctx != 0) throw not_ground_error(i);

    GroundCoalgebra g;
    for (const Clause& c : program.clauses) {
        g.table.emplace(c.head, std::vector<std::vector<Atom>>{});
        for (const Atom& b : c.body) g.table.emplace(b, std::vector<std::vector<Atom>>{});
    }
    for (const Clause& c : program.clauses) {
        std::vector<Atom> body = c.body;
        std::sort(body.begin(), body.end(), atom_less);
        body.erase(std::unique(body.begin(), body.end()), body.end());
        auto& sets = g.table[c.head];
        if (std::find(sets.begin(), sets.end(), body) == sets.end())
            sets.push_back(std::move(body));
    }
    return g;
}

// ---------------------------------------------------------------------------
// One-step maps
// ---------------------------------------------------------------------------

StepValue step(const Program& program, const Atom& atom) {
    Classification cls = classify(program);
    if (cls.existential) throw existential_escape_error(cls.witnesses.front());
    StepValue out;
    for (const ClauseMatch& m : matching_clauses(program, atom)) {
        Body b;
        b.exist_count = 0;
        b.atoms = m.body;  // fresh == 0 for non-existential programs
        out.push_back(std::move(b));
    }
    dedup_step(out, atom.ctx);
    return out;
}

StepValue step_ext(const Program& program, const ExtAtom& atom) {
    StepValue out;
    for (const ClauseMatch& m : matching_clauses(program, atom.atom))
        out.push_back(make_body(m.body, atom.bound));
    dedup_step(out, atom.bound);
    return out;
}

StepValue step_ext(const Program& program, const Atom& atom) {
    return step_ext(program, embed(atom));
}

RawStep raw_step(const Program& program, const ExtAtom& atom, int* bound_out) {
    std::vector<ClauseMatch> matches = matching_clauses(program, atom.atom);
    int max_fresh = 0;
    for (const ClauseMatch& m : matches) max_fresh = std::max(max_fresh, m.fresh);
    RawStep raw;
    raw.exist_count = atom.exist_count + max_fresh;
    int ctx = atom.bound + raw.exist_count;
    for (const ClauseMatch& m : matches) {
        std::vector<Atom> set;
        for (const Atom& a : m.body) set.push_back(widen(a, ctx));
        raw.sets.push_back(std::move(set));
    }
    if (bound_out) *bound_out = atom.bound;
    return raw;
}

// ---------------------------------------------------------------------------
// Approximants
// ---------------------------------------------------------------------------

bool Approximant::operator==(const Approximant& other) const {
    return compare(*this, other) == 0;
}

int compare(const Approximant& a, const Approximant& b) {
    if (a.level != b.level) return a.level - b.level;
    if (int c = compare(a.atom, b.atom); c != 0) return c;
    if (a.sets.size() != b.sets.size()) return a.sets.size() < b.sets.size() ? -1 : 1;
    for (size_t i = 0; i < a.sets.size(); ++i) {
        if (a.sets[i].size() != b.sets[i].size())
            return a.sets[i].size() < b.sets[i].size() ? -1 : 1;
        for (size_t j = 0; j < a.sets[i].size(); ++j)
            if (int c = compare(a.sets[i][j], b.sets[i][j]); c != 0) return c;
    }
    return 0;
}

std::string to_string(const Approximant& a) {
    if (a.level == 0) return a.atom.to_string();
    std::ostringstream out;
    out << '(' << a.atom.to_string() << ", {";
    for (size_t i = 0; i < a.sets.size(); ++i) {
        if (i) out << ", ";
        out << '{';
        for (size_t j = 0; j < a.sets[i].size(); ++j) {
            if (j) out << ", ";
            out << to_string(a.sets[i][j]);
        }
        out << '}';
    }
    out << "})";
    return out.str();
}

namespace {

bool approx_less(const Approximant& a, const Approximant& b) { return compare(a, b) < 0; }

void normalize_sets(std::vector<std::vector<Approximant>>& sets) {
    for (auto& inner : sets) {
        std::sort(inner.begin(), inner.end(), approx_less);
        inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
    }
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), approx_less);
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

Approximant approx_rec(const Program& program, const ExtAtom& atom, int k, Mode mode) {
    Approximant out;
    out.level = k;
    out.atom = atom;
    if (k == 0) return out;
    StepValue value =
        mode == Mode::Plain ? step(program, atom.atom) : step_ext(program, atom);
    for (const Body& b : value) {
        std::vector<Approximant> inner;
        for (const Atom& a : b.atoms)
            inner.push_back(approx_rec(program, canonicalize(a, atom.bound), k - 1, mode));
        out.sets.push_back(std::move(inner));
    }
    normalize_sets(out.sets);
    return out;
}

}  // namespace

Approximant approximant(const Program& program, const Atom& atom, int k, Mode mode) {
    if (mode == Mode::Plain) {
        Classification cls = classify(program);
        if (cls.existential) throw existential_escape_error(cls.witnesses.front());
    }
    return approx_rec(program, embed(atom), k, mode);
}

namespace {

Approximant ground_rec(const GroundCoalgebra& g, const Atom& atom, int k) {
    Approximant out;
    out.level = k;
    out.atom = embed(atom);
    if (k == 0) return out;
    for (const std::vector<Atom>& set : g.at(atom)) {
        std::vector<Approximant> inner;
        for (const Atom& a : set) inner.push_back(ground_rec(g, a, k - 1));
        out.sets.push_back(std::move(inner));
    }
    normalize_sets(out.sets);
    return out;
}

}  // namespace

Approximant ground_approximant(const Program& program, const Atom& atom, int k) {
    GroundCoalgebra g = ground_step(program);
    return ground_rec(g, atom, k);
}

Approximant project(const Approximant& a) {
    if (a.level == 0) throw context_error("project: level-0 approximant has no projection");
    Approximant out;
    out.level = a.level - 1;
    out.atom = a.atom;
    if (out.level == 0) return out;
    for (const auto& inner : a.sets) {
        std::vector<Approximant> projected;
        for (const Approximant& c : inner) projected.push_back(project(c));
        out.sets.push_back(std::move(projected));
    }
    normalize_sets(out.sets);
    return out;
}

namespace {

Approximant tree_rec(const AndNode& node, int bound, int k) {
    Approximant out;
    out.level = k;
    out.atom = canonicalize(node.atom, bound);
    if (k == 0) return out;
    if (node.frontier == Frontier::Truncated)
        throw context_error("tree_to_approximant: tree shallower than the requested level");
    for (const OrNode& o : node.or_children) {
        std::vector<Approximant> inner;
        for (const AndNode& c : o.and_children) inner.push_back(tree_rec(c, bound, k - 1));
        out.sets.push_back(std::move(inner));
    }
    normalize_sets(out.sets);
    return out;
}

}  // namespace

Approximant tree_to_approximant(const CoTree& tree, int k) {
    return tree_rec(tree.root, tree.bound, k);
}

// ---------------------------------------------------------------------------
// Laxness and injection strictness
// ---------------------------------------------------------------------------

Witness check_lax(const Program& program, const Substitution& sub, const Atom& atom, int k) {
    Witness w;
    StepValue lhs = map_step_value(sub, step_ext(program, atom));
    StepValue rhs = step_ext(program, apply(sub, atom));
    if (!step_leq(lhs, rhs, sub.source)) {
        w.detail = "one-step order fails for " + sub.to_string() + " at " + format_atom(atom) +
                   ": " + step_to_string(lhs, sub.source) + " vs " +
                   step_to_string(rhs, sub.source);
        return w;
    }
    CoTree t = build_cotree(program, atom, k);
    TreeOrderWitness tw =
        tree_leq(subst_tree(program, sub, t), build_cotree(program, apply(sub, atom), k), k);
    if (!tw.holds) {
        w.detail = "tree order fails for " + sub.to_string() + " at " + format_atom(atom) +
                   " (" + tw.fails_at + ")";
        return w;
    }
    w.holds = true;
    return w;
}

Witness check_inj_strict(const Program& program, const Injection& inj, const Atom& atom, int k) {
    Witness w;
    Substitution sub = injection_subst(inj);
    StepValue lhs = map_step_value(sub, step_ext(program, atom));
    StepValue rhs = step_ext(program, apply(sub, atom));
    if (!step_equal(lhs, rhs, sub.source)) {
        w.detail = "one-step values differ along the injection at " + format_atom(atom) + ": " +
                   step_to_string(lhs, sub.source) + " vs " + step_to_string(rhs, sub.source);
        return w;
    }
    CoTree moved = subst_tree(program, sub, build_cotree(program, atom, k));
    CoTree built = build_cotree(program, apply(sub, atom), k);
    if (!(moved == built)) {
        w.detail = "trees differ along the injection at " + format_atom(atom);
        return w;
    }
    w.holds = true;
    return w;
}

}  // namespace laxlog
