#pragma once

#include "laxlog/generators.hpp"
#include "laxlog/lawvere.hpp"

namespace laxlog {

// An atom over n bound variables plus k canonically numbered existentials:
// indices 0..n-1 of the underlying atom are bound, n..n+k-1 existential.
// Canonical form: every existential index occurs in the atom and they are
// numbered by first occurrence left to right, so k is minimal.
struct ExtAtom {
    int bound = 0;
    int exist_count = 0;
    Atom atom;  // atom.ctx == bound + exist_count

    bool operator==(const ExtAtom&) const = default;

    // Bound variables print as x1..xn, existentials as z1..zk.
    std::string to_string() const { return format_atom(atom, bound); }
};

int compare(const ExtAtom& a, const ExtAtom& b);
inline bool ext_atom_less(const ExtAtom& a, const ExtAtom& b) { return compare(a, b) < 0; }

// Drop unused existential slots and renumber the used ones by first
// occurrence. Two inputs related by an injection fixing the bound variables
// canonicalize identically.
ExtAtom canonicalize(const Atom& a, int bound);

// The unit: an atom over n with no existentials.
ExtAtom embed(const Atom& a);

// Functorial action of an arrow f: n -> n' on an ExtAtom over n': the bound
// part is substituted, each existential is carried to a fresh existential of
// the result, and the result is canonicalized.
ExtAtom int_map(const Substitution& f, const ExtAtom& e);

// An ExtAtom over bound context n+k, seen through an outer layer of k
// existentials over n.
struct NestedExtAtom {
    int bound = 0;        // n
    int exist_count = 0;  // k
    ExtAtom inner;        // inner.bound == bound + exist_count

    bool operator==(const NestedExtAtom&) const = default;
};

// The multiplication: merge the two existential layers and renumber.
ExtAtom flatten(const NestedExtAtom& ne);

// A one-step clause-application value before any colimit identification:
// sets of atoms over n+k for a single shared k.
struct RawStep {
    int exist_count = 0;
    std::vector<std::vector<Atom>> sets;
};

// The distributive-law comparison: canonicalize each atom separately (the
// pointwise image), preserving the set-of-sets shape; duplicates that
// appear after canonicalization are merged, and both levels are sorted.
std::vector<std::vector<ExtAtom>> dist_law(const RawStep& raw, int bound);

struct LawReport {
    int samples = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Seeded check of the unit and associativity laws of (embed, flatten) plus
// canonicalization idempotence on random atoms over the given signature.
LawReport check_monad_laws(const Signature& sig, int sample_count, uint64_t seed);

// Seeded check that canonicalize is invariant under injections that fix the
// bound variables.
LawReport check_canonicalize_invariance(const Signature& sig, int sample_count, uint64_t seed);

// Random canonical ExtAtom, used by the law checks and tests.
ExtAtom random_ext_atom(Rng& rng, const Signature& sig, int bound, int extra, int depth);

}  // namespace laxlog
