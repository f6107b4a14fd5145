#pragma once

#include <map>

#include "laxlog/cotree.hpp"
#include "laxlog/intfunctor.hpp"

namespace laxlog {

struct not_ground_error : context_error {
    not_ground_error(size_t clause_index)
        : context_error("clause " + std::to_string(clause_index + 1) + " is not ground"),
          clause_index(clause_index) {}
    size_t clause_index;
};

struct existential_escape_error : context_error {
    existential_escape_error(size_t clause_index)
        : context_error("clause " + std::to_string(clause_index + 1) +
                        " has existential variables"),
          clause_index(clause_index) {}
    size_t clause_index;
};

// One inner set of a one-step value over bound context n: atoms over n+k
// with the k existentials shared across the set, numbered by first
// occurrence in production order. Atoms are distinct and kept in production
// order; set identity is order-independent via `key`.
struct Body {
    int exist_count = 0;
    std::vector<Atom> atoms;

    bool operator==(const Body&) const = default;

    // Permutation-minimal renumbered form; equal for equal sets regardless
    // of production order.
    std::vector<Atom> key(int bound) const;
    // The set of atoms as individually canonical ExtAtoms, sorted. This is
    // the carrier-level reading of the set, forgetting cross-atom sharing.
    std::vector<ExtAtom> classes(int bound) const;
    std::string to_string(int bound) const;
};

// Joint canonicalization of a set of atoms over some context >= bound.
Body make_body(const std::vector<Atom>& atoms, int bound);

// A one-step value: the set of instantiated clause bodies, in clause order,
// without duplicate sets.
using StepValue = std::vector<Body>;

bool step_equal(const StepValue& a, const StepValue& b, int bound);
// The finite-powerset order twice, over the discrete carrier of canonical
// ExtAtoms: every set of `a` is contained in some set of `b`.
bool step_leq(const StepValue& a, const StepValue& b, int bound);
// The functorial action of an arrow f on a value over f's target context.
StepValue map_step_value(const Substitution& f, const StepValue& value);
std::string step_to_string(const StepValue& v, int bound);

// The ground one-step table: every atom occurring in a variable-free program
// maps to the set of bodies of the clauses whose head is exactly that atom.
struct GroundCoalgebra {
    std::map<Atom, std::vector<std::vector<Atom>>, decltype(&atom_less)> table{&atom_less};

    // Total: atoms outside the table have no clauses.
    const std::vector<std::vector<Atom>>& at(const Atom& atom) const;
};

GroundCoalgebra ground_step(const Program& program);

// One-step with term matching; requires a program without existential
// variables, so every instantiated body stays inside the atom's context.
StepValue step(const Program& program, const Atom& atom);

// One-step for arbitrary programs: clause variables not bound by the head
// match become canonical existentials of the result.
StepValue step_ext(const Program& program, const ExtAtom& atom);
StepValue step_ext(const Program& program, const Atom& atom);

// The uncanonicalized one-step value: all clause bodies over one shared
// extended context. step_ext factors through this and dist_law.
RawStep raw_step(const Program& program, const ExtAtom& atom, int* bound_out = nullptr);

enum class Mode { Plain, Ext };

// The level-k unfolding of the one-step map: level 0 is the atom; level k+1
// pairs the atom with the one-step image of level-k values. Sets are kept
// sorted and deduplicated, so equality is value equality.
struct Approximant {
    int level = 0;
    ExtAtom atom;
    std::vector<std::vector<Approximant>> sets;

    bool operator==(const Approximant&) const;
};

int compare(const Approximant& a, const Approximant& b);
std::string to_string(const Approximant& a);

Approximant approximant(const Program& program, const Atom& atom, int k, Mode mode);
Approximant ground_approximant(const Program& program, const Atom& atom, int k);

// Drop the innermost layer: level k+1 to level k.
Approximant project(const Approximant& a);

// Reads a depth-bounded derivation tree as an approximant of level k
// (requires tree.depth >= k). This is the independent second route to the
// approximant value.
Approximant tree_to_approximant(const CoTree& tree, int k);

struct Witness {
    bool holds = false;
    std::string detail;
};

// Laxness of the one-step map along an arbitrary arrow: the image of the
// one-step value under the arrow is dominated by the one-step value of the
// substituted atom, and likewise for depth-k trees under subst_tree.
Witness check_lax(const Program& program, const Substitution& sub, const Atom& atom, int k);

// Strict naturality along injections: the same comparison demanding
// equality on both the one-step values and the depth-k trees.
Witness check_inj_strict(const Program& program, const Injection& inj, const Atom& atom, int k);

}  // namespace laxlog
