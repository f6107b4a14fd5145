#include "laxlog/intfunctor.hpp"

#include <algorithm>
#include <map>

namespace laxlog {

int compare(const ExtAtom& a, const ExtAtom& b) {
    if (a.bound != b.bound) return a.bound - b.bound;
    if (a.exist_count != b.exist_count) return a.exist_count - b.exist_count;
    return compare(a.atom, b.atom);
}

namespace {

void collect_order(const Term& t, int bound, std::vector<int>& order) {
    if (t.is_var()) {
        if (t.var >= bound && std::find(order.begin(), order.end(), t.var) == order.end())
            order.push_back(t.var);
        return;
    }
    for (const Term& a : t.args) collect_order(a, bound, order);
}

Term renumber(const Term& t, int bound, const std::map<int, int>& to) {
    if (t.is_var()) {
        if (t.var < bound) return t;
        return Term::variable(to.at(t.var));
    }
    Term out;
    out.sym = t.sym;
    out.args.reserve(t.args.size());
    for (const Term& a : t.args) out.args.push_back(renumber(a, bound, to));
    return out;
}

}  // namespace

ExtAtom canonicalize(const Atom& a, int bound) {
    if (bound > a.ctx) throw context_error("canonicalize: bound exceeds the atom's context");
    std::vector<int> order;
    for (const Term& t : a.args) collect_order(t, bound, order);
    std::map<int, int> to;
    for (size_t i = 0; i < order.size(); ++i) to[order[i]] = bound + static_cast<int>(i);

    ExtAtom e;
    e.bound = bound;
    e.exist_count = static_cast<int>(order.size());
    e.atom.pred = a.pred;
    e.atom.ctx = bound + e.exist_count;
    for (const Term& t : a.args) e.atom.args.push_back(renumber(t, bound, to));
    return e;
}

ExtAtom embed(const Atom& a) {
    ExtAtom e;
    e.bound = a.ctx;
    e.exist_count = 0;
    e.atom = a;
    return e;
}

ExtAtom int_map(const Substitution& f, const ExtAtom& e) {
    if (f.target != e.bound)
        throw context_error("int_map: substitution target does not match the bound context");
    Substitution padded = pad(f, e.exist_count);
    return canonicalize(apply(padded, e.atom), f.source);
}

ExtAtom flatten(const NestedExtAtom& ne) {
    if (ne.inner.bound != ne.bound + ne.exist_count)
        throw context_error("flatten: inner bound context does not match the outer layers");
    return canonicalize(ne.inner.atom, ne.bound);
}

std::vector<std::vector<ExtAtom>> dist_law(const RawStep& raw, int bound) {
    std::vector<std::vector<ExtAtom>> out;
    for (const auto& set : raw.sets) {
        std::vector<ExtAtom> inner;
        for (const Atom& a : set) {
            ExtAtom e = canonicalize(a, bound);
            if (std::find(inner.begin(), inner.end(), e) == inner.end())
                inner.push_back(std::move(e));
        }
        std::sort(inner.begin(), inner.end(), ext_atom_less);
        if (std::find(out.begin(), out.end(), inner) == out.end())
            out.push_back(std::move(inner));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            ext_atom_less);
    });
    return out;
}

ExtAtom random_ext_atom(Rng& rng, const Signature& sig, int bound, int extra, int depth) {
    return canonicalize(random_atom(rng, sig, bound + extra, depth), bound);
}

LawReport check_monad_laws(const Signature& sig, int sample_count, uint64_t seed) {
    LawReport report;
    Rng rng(seed);
    for (int i = 0; i < sample_count; ++i) {
        report.samples++;
        int n = rng.below(3);
        int k = rng.below(3);
        int l = rng.below(3);
        int m = rng.below(2);

        ExtAtom e;
        try {
            e = random_ext_atom(rng, sig, n, k, 2);
        } catch (const context_error&) {
            continue;  // signature admits no atom over this context
        }

        // canonicalize is idempotent
        ExtAtom twice = canonicalize(e.atom, e.bound);
        if (!(twice == e))
            report.violations.push_back("canonicalize not idempotent on " + e.to_string());

        // left unit: flatten over a trivial outer layer is the identity
        NestedExtAtom unit_outer{n, 0, e};
        if (!(flatten(unit_outer) == e))
            report.violations.push_back("left unit failed on " + e.to_string());

        // right unit: an inner embed flattens back to the outer value
        NestedExtAtom unit_inner{e.bound, e.exist_count, embed(e.atom)};
        if (!(flatten(unit_inner) == e))
            report.violations.push_back("right unit failed on " + e.to_string());

        // associativity on a triple layering (n, k, l, m)
        ExtAtom deep;
        try {
            deep = random_ext_atom(rng, sig, n + k + l, m, 2);
        } catch (const context_error&) {
            continue;
        }
        // inner first: collapse (n+k | l | deep) then (n | k | result)
        ExtAtom inner_first =
            flatten(NestedExtAtom{n, k, flatten(NestedExtAtom{n + k, l, deep})});
        // outer first: merge the (k, l) layers into one of k+l
        ExtAtom outer_first = flatten(NestedExtAtom{n, k + l, deep});
        if (!(inner_first == outer_first))
            report.violations.push_back("associativity failed on " + deep.to_string());
    }
    return report;
}

LawReport check_canonicalize_invariance(const Signature& sig, int sample_count, uint64_t seed) {
    LawReport report;
    Rng rng(seed);
    for (int i = 0; i < sample_count; ++i) {
        report.samples++;
        int n = rng.below(3);
        int k = rng.below(3);
        Atom a;
        try {
            a = random_atom(rng, sig, n + k, 2);
        } catch (const context_error&) {
            continue;
        }
        // An injection fixing the bound block sends each bound variable to
        // itself; existentials go to distinct slots at or beyond n.
        int wider = n + k + rng.below(3);
        Injection iota = random_injection(rng, n + k, wider);
        for (int v = 0; v < n; ++v) iota.map[v] = v;
        std::vector<bool> used(wider, false);
        for (int v = 0; v < n; ++v) used[v] = true;
        for (int v = n; v < n + k; ++v) {
            if (iota.map[v] < n || used[iota.map[v]]) {
                int w = n;
                while (used[w]) ++w;
                iota.map[v] = w;
            }
            used[iota.map[v]] = true;
        }

        // Rename the atom along the injection.
        Substitution rename;
        rename.source = wider;
        rename.target = n + k;
        for (int v = 0; v < n + k; ++v) rename.assignment.push_back(Term::variable(iota.map[v]));
        Atom renamed = apply(rename, widen(a, n + k));

        if (!(canonicalize(renamed, n) == canonicalize(a, n)))
            report.violations.push_back("canonical form not injection-invariant on " +
                                        format_atom(a, n));
    }
    return report;
}

}  // namespace laxlog
