#pragma once

#include <optional>

#include "laxlog/syntax.hpp"

namespace laxlog {

// An arrow n -> m of the substitution category: one term over x1..xn for
// each variable of the target context m. Applying it to an atom over m
// yields an atom over n.
struct Substitution {
    int source = 0;
    int target = 0;
    std::vector<Term> assignment;  // size == target, terms over `source`

    bool operator==(const Substitution&) const = default;

    bool is_identity() const;

    // {x1->t1, ...} with identity entries omitted. Source-context indices at
    // or beyond `bound` print as existentials z1, z2, ...
    std::string to_string(int bound = -1) const;
    // Adds the "m->n:" prefix so distinct arrows never collide as map keys.
    std::string key_string() const;
};

Substitution identity_subst(int n);

Term apply(const Substitution& s, const Term& t);
Atom apply(const Substitution& s, const Atom& a);

// compose(g: k->n, f: n->m) is the arrow k->m with
// apply(compose(g,f), A) = apply(g, apply(f, A)).
Substitution compose(const Substitution& g, const Substitution& f);

// Widen an arrow n->m to (n+k)->(m+k), sending each added variable of the
// target to the corresponding added variable of the source.
Substitution pad(const Substitution& s, int k);

// An injective map of contexts: `map[j]` is where variable j of `source`
// lands in `target`.
struct Injection {
    int source = 0;
    int target = 0;
    std::vector<int> map;

    bool operator==(const Injection&) const = default;
};

Injection identity_injection(int n);
Injection canonical_inclusion(int n, int m);
// compose(j, i) first applies i, then j.
Injection compose(const Injection& j, const Injection& i);

// The renaming arrow target->source corresponding to an injection: variable
// j of the (substitution) target maps to variable map[j].
Substitution injection_subst(const Injection& i);

// All injections n -> m, in lexicographic order of their index lists.
std::vector<Injection> enumerate_injections(int n, int m);

// All arrows n -> m whose terms have depth <= d, ordered as an odometer over
// enumerate_terms(sig, n, d) with the first tuple position most significant.
std::vector<Substitution> enumerate_substitutions(const Signature& sig, int n, int m, int d);

// Most general matcher: theta with apply(theta, pattern) == target, matching
// one-sided on the pattern. Pattern variables that do not occur in the
// pattern map to themselves when the target context contains them; if it
// does not, there is no matcher into the strictly smaller context.
std::optional<Substitution> mgm(const Atom& pattern, const Atom& target);

// Most general unifier of two atoms over a shared context, with occurs
// check; the result is idempotent. When two variables meet, the larger index
// is bound to the smaller.
std::optional<Substitution> mgu(const Atom& a, const Atom& b);

// One clause applied to a goal atom: the head is matched against the goal,
// clause variables not bound by the match become fresh variables appended to
// the goal's context, and the instantiated body is deduplicated in order of
// first occurrence.
struct ClauseMatch {
    size_t clause_index = 0;
    Substitution matcher;     // (goal ctx + fresh) -> clause ctx
    int fresh = 0;            // number of appended variables
    std::vector<Atom> body;   // over goal ctx + fresh
};

std::optional<ClauseMatch> match_clause(const Clause& clause, size_t index, const Atom& goal);
std::vector<ClauseMatch> matching_clauses(const Program& program, const Atom& goal);

}  // namespace laxlog
