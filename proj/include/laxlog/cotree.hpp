#pragma once

#include "laxlog/lawvere.hpp"

namespace laxlog {

enum class Frontier { Expanded, Truncated };

struct OrNode;

// An and-node of the derivation tree. `atom` lives over the tree's bound
// context extended by the existentials introduced along the path from the
// root (atom.ctx == bound + exist_count).
struct AndNode {
    Atom atom;
    int exist_count = 0;
    Frontier frontier = Frontier::Expanded;
    std::vector<OrNode> or_children;

    bool operator==(const AndNode&) const;
};

// One applicable clause at its parent and-node, identified by the clause
// index and the matcher. Children are the distinct instantiated body atoms
// in order of first occurrence.
struct OrNode {
    size_t clause_index = 0;
    Substitution matcher;  // (parent ctx + fresh) -> clause ctx
    std::vector<AndNode> and_children;

    bool operator==(const OrNode&) const;
};

struct CoTree {
    int bound = 0;  // context of the root atom
    int depth = 0;  // and-node generations below which nodes are expanded
    AndNode root;

    bool operator==(const CoTree&) const = default;
};

// The depth-bounded derivation tree for `root`: an expanded and-node carries
// one or-node per clause whose head matches its atom; or-node children are
// the distinct instantiated body atoms, with unbound clause variables turned
// into fresh variables appended to the path context. Nodes at depth `depth`
// are left Truncated.
CoTree build_cotree(const Program& program, const Atom& root, int depth);

// Cut a tree down to a smaller depth bound.
CoTree truncate(const CoTree& tree, int depth);

struct TreeOrderWitness {
    bool holds = false;
    int depth = 0;          // depth actually compared
    std::string fails_at;   // path to the first failure when !holds
};

// The one-sided tree order, levelwise: every or-node of the left root must
// be covered by an or-node of the right root for the same clause whose
// children include, atom for atom, children that again dominate the left
// ones. Compared down to min(depth, both trees' bounds).
TreeOrderWitness tree_leq(const CoTree& t1, const CoTree& t2, int depth);

// Maps every node atom and every matcher through `sub` (existentials are
// carried to themselves over the new bound), then prunes: children that
// became equal are merged. Or-nodes always survive because matching is
// stable under substitution of the goal; this is asserted.
CoTree subst_tree(const Program& program, const Substitution& sub, const CoTree& tree);

enum class TreeFormat { Ascii, Dot, Json };

std::string export_tree(const CoTree& tree, TreeFormat format);

// Counts including the root.
size_t count_and_nodes(const CoTree& tree);
size_t count_or_nodes(const CoTree& tree);

// Recomputes the expansion of every non-truncated and-node from the program
// and compares; returns the path of the first mismatch, if any.
std::optional<std::string> check_tree_wellformed(const Program& program, const CoTree& tree);

}  // namespace laxlog
