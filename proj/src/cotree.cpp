#include "laxlog/cotree.hpp"

#include <algorithm>
#include <sstream>

namespace laxlog {

bool AndNode::operator==(const AndNode& other) const {
    return atom == other.atom && exist_count == other.exist_count &&
           frontier == other.frontier && or_children == other.or_children;
}

bool OrNode::operator==(const OrNode& other) const {
    return clause_index == other.clause_index && matcher == other.matcher &&
           and_children == other.and_children;
}

namespace {

AndNode build_node(const Program& program, const Atom& atom, int bound, int level, int depth) {
    AndNode node;
    node.atom = atom;
    node.exist_count = atom.ctx - bound;
    if (level >= depth) {
        node.frontier = Frontier::Truncated;
        return node;
    }
    node.frontier = Frontier::Expanded;
    for (ClauseMatch& m : matching_clauses(program, atom)) {
        OrNode or_node;
        or_node.clause_index = m.clause_index;
        or_node.matcher = std::move(m.matcher);
        for (const Atom& child : m.body)
            or_node.and_children.push_back(build_node(program, child, bound, level + 1, depth));
        node.or_children.push_back(std::move(or_node));
    }
    return node;
}

}  // namespace

CoTree build_cotree(const Program& program, const Atom& root, int depth) {
    if (depth < 0) throw context_error("build_cotree: negative depth");
    CoTree tree;
    tree.bound = root.ctx;
    tree.depth = depth;
    tree.root = build_node(program, root, root.ctx, 0, depth);
    return tree;
}

namespace {

AndNode truncate_node(const AndNode& node, int level, int depth) {
    AndNode out;
    out.atom = node.atom;
    out.exist_count = node.exist_count;
    if (level >= depth) {
        out.frontier = Frontier::Truncated;
        return out;
    }
    out.frontier = node.frontier;
    for (const OrNode& o : node.or_children) {
        OrNode oo;
        oo.clause_index = o.clause_index;
        oo.matcher = o.matcher;
        for (const AndNode& c : o.and_children)
            oo.and_children.push_back(truncate_node(c, level + 1, depth));
        out.or_children.push_back(std::move(oo));
    }
    return out;
}

}  // namespace

CoTree truncate(const CoTree& tree, int depth) {
    if (depth > tree.depth)
        throw context_error("truncate: target depth exceeds the tree's bound");
    CoTree out;
    out.bound = tree.bound;
    out.depth = depth;
    out.root = truncate_node(tree.root, 0, depth);
    return out;
}

// ---------------------------------------------------------------------------
// Tree order
// ---------------------------------------------------------------------------

namespace {

bool leq_node(const AndNode& a, const AndNode& b, int depth, std::string path,
              std::string& fails_at) {
    if (depth <= 0) return true;
    for (const OrNode& oa : a.or_children) {
        bool covered = false;
        for (const OrNode& ob : b.or_children) {
            // An or-node is only covered by one for the same clause; a
            // childless or-node still demands its clause on the right.
            if (ob.clause_index != oa.clause_index) continue;
            bool all_children = true;
            for (const AndNode& ca : oa.and_children) {
                const AndNode* match = nullptr;
                for (const AndNode& cb : ob.and_children)
                    if (cb.atom == ca.atom) {
                        match = &cb;
                        break;
                    }
                if (!match ||
                    !leq_node(ca, *match, depth - 1,
                              path + "/" + std::to_string(oa.clause_index + 1) + ":" +
                                  format_atom(ca.atom, ca.atom.ctx - ca.exist_count),
                              fails_at)) {
                    all_children = false;
                    break;
                }
            }
            if (all_children) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            if (fails_at.empty())
                fails_at = path + "/clause " + std::to_string(oa.clause_index + 1);
            return false;
        }
    }
    return true;
}

}  // namespace

TreeOrderWitness tree_leq(const CoTree& t1, const CoTree& t2, int depth) {
    if (!(t1.root.atom == t2.root.atom))
        throw context_error("tree_leq: root atoms differ");
    TreeOrderWitness w;
    w.depth = std::min({depth, t1.depth, t2.depth});
    w.holds = leq_node(t1.root, t2.root, w.depth, format_atom(t1.root.atom), w.fails_at);
    return w;
}

// ---------------------------------------------------------------------------
// Substitution on trees
// ---------------------------------------------------------------------------

namespace {

AndNode subst_node(const Program& program, const Substitution& sub, const AndNode& node) {
    // sub: n' -> n on the bound part; existentials ride along unchanged.
    Substitution here = pad(sub, node.exist_count);
    AndNode out;
    out.atom = apply(here, node.atom);
    out.exist_count = node.exist_count;
    out.frontier = node.frontier;
    for (const OrNode& o : node.or_children) {
        OrNode oo;
        oo.clause_index = o.clause_index;
        int child_exists =
            o.and_children.empty() ? node.exist_count : o.and_children.front().exist_count;
        oo.matcher = compose(pad(sub, child_exists), o.matcher);
        // Matching is preserved under substitution of the goal, so the
        // or-node always survives; pruning only merges children below.
        if (!(apply(oo.matcher, program.clauses[o.clause_index].head) ==
              widen(out.atom, out.atom.ctx + (child_exists - node.exist_count))))
            throw context_error("subst_tree: substituted matcher no longer matches");
        for (const AndNode& c : o.and_children) {
            AndNode mapped = subst_node(program, sub, c);
            bool dup = false;
            for (const AndNode& seen : oo.and_children)
                if (seen.atom == mapped.atom) {
                    dup = true;
                    break;
                }
            if (!dup) oo.and_children.push_back(std::move(mapped));
        }
        out.or_children.push_back(std::move(oo));
    }
    return out;
}

}  // namespace

CoTree subst_tree(const Program& program, const Substitution& sub, const CoTree& tree) {
    if (sub.target != tree.bound)
        throw context_error("subst_tree: substitution target does not match the tree bound");
    CoTree out;
    out.bound = sub.source;
    out.depth = tree.depth;
    out.root = subst_node(program, sub, tree.root);
    return out;
}

// ---------------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------------

namespace {

void ascii_node(std::ostringstream& out, const AndNode& node, int bound, int indent) {
    out << std::string(indent * 2, ' ') << format_atom(node.atom, bound);
    if (node.frontier == Frontier::Truncated) out << " ...";
    out << '\n';
    for (const OrNode& o : node.or_children) {
        out << std::string(indent * 2 + 2, ' ') << "• clause " << (o.clause_index + 1)
            << ' ' << o.matcher.to_string(bound) << '\n';
        for (const AndNode& c : o.and_children) ascii_node(out, c, bound, indent + 2);
    }
}

void dot_node(std::ostringstream& out, const AndNode& node, int bound, int& counter,
              int parent) {
    int id = counter++;
    out << "  n" << id << " [label=\"" << format_atom(node.atom, bound) << "\"";
    if (node.frontier == Frontier::Truncated) out << " style=dashed";
    out << "];\n";
    if (parent >= 0) out << "  n" << parent << " -> n" << id << ";\n";
    for (const OrNode& o : node.or_children) {
        int oid = counter++;
        out << "  n" << oid << " [shape=point width=0.12 label=\"\" xlabel=\"" << (o.clause_index + 1)
            << "\"];\n";
        out << "  n" << id << " -> n" << oid << ";\n";
        for (const AndNode& c : o.and_children) dot_node(out, c, bound, counter, oid);
    }
}

void json_escape(std::ostringstream& out, const std::string& s) {
    for (char c : s) {
        if (c == '"' || c == '\\') out << '\\';
        out << c;
    }
}

void json_node(std::ostringstream& out, const AndNode& node, int bound, int indent) {
    std::string pad(indent, ' ');
    out << "{\n" << pad << "  \"atom\": \"";
    json_escape(out, format_atom(node.atom, bound));
    out << "\",\n" << pad << "  \"existentials\": " << node.exist_count << ",\n"
        << pad << "  \"truncated\": " << (node.frontier == Frontier::Truncated ? "true" : "false")
        << ",\n" << pad << "  \"or_nodes\": [";
    for (size_t i = 0; i < node.or_children.size(); ++i) {
        const OrNode& o = node.or_children[i];
        if (i) out << ',';
        out << "\n" << pad << "    {\n" << pad << "      \"clause\": " << (o.clause_index + 1)
            << ",\n" << pad << "      \"matcher\": \"";
        json_escape(out, o.matcher.to_string(bound));
        out << "\",\n" << pad << "      \"children\": [";
        for (size_t j = 0; j < o.and_children.size(); ++j) {
            if (j) out << ',';
            out << "\n" << pad << "        ";
            json_node(out, o.and_children[j], bound, indent + 8);
        }
        if (!o.and_children.empty()) out << "\n" << pad << "      ";
        out << "]\n" << pad << "    }";
    }
    if (!node.or_children.empty()) out << "\n" << pad << "  ";
    out << "]\n" << pad << "}";
}

}  // namespace

std::string export_tree(const CoTree& tree, TreeFormat format) {
    std::ostringstream out;
    switch (format) {
        case TreeFormat::Ascii:
            ascii_node(out, tree.root, tree.bound, 0);
            break;
        case TreeFormat::Dot: {
            out << "digraph cotree {\n  node [shape=ellipse];\n";
            int counter = 0;
            dot_node(out, tree.root, tree.bound, counter, -1);
            out << "}\n";
            break;
        }
        case TreeFormat::Json: {
            out << "{\n  \"bound\": " << tree.bound << ",\n  \"depth\": " << tree.depth
                << ",\n  \"root\": ";
            json_node(out, tree.root, tree.bound, 2);
            out << "\n}\n";
            break;
        }
    }
    return out.str();
}

namespace {

void count(const AndNode& node, size_t& ands, size_t& ors) {
    ++ands;
    for (const OrNode& o : node.or_children) {
        ++ors;
        for (const AndNode& c : o.and_children) count(c, ands, ors);
    }
}

}  // namespace

size_t count_and_nodes(const CoTree& tree) {
    size_t a = 0, o = 0;
    count(tree.root, a, o);
    return a;
}

size_t count_or_nodes(const CoTree& tree) {
    size_t a = 0, o = 0;
    count(tree.root, a, o);
    return o;
}

namespace {

std::optional<std::string> check_node(const Program& program, const AndNode& node, int bound,
                                      const std::string& path) {
    if (node.atom.ctx != bound + node.exist_count)
        return path + ": context does not match bound + existentials";
    if (node.frontier == Frontier::Truncated) {
        if (!node.or_children.empty()) return path + ": truncated node has children";
        return std::nullopt;
    }
    std::vector<ClauseMatch> expected = matching_clauses(program, node.atom);
    if (expected.size() != node.or_children.size())
        return path + ": or-node count mismatch";
    for (size_t i = 0; i < expected.size(); ++i) {
        const OrNode& o = node.or_children[i];
        if (o.clause_index != expected[i].clause_index || !(o.matcher == expected[i].matcher))
            return path + ": or-node " + std::to_string(i) + " differs";
        if (o.and_children.size() != expected[i].body.size())
            return path + ": child count differs at or-node " + std::to_string(i);
        for (size_t j = 0; j < expected[i].body.size(); ++j) {
            if (!(o.and_children[j].atom == expected[i].body[j]))
                return path + ": child atom differs at or-node " + std::to_string(i);
            auto sub = check_node(program, o.and_children[j], bound,
                                  path + "/" + format_atom(o.and_children[j].atom, bound));
            if (sub) return sub;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::string> check_tree_wellformed(const Program& program, const CoTree& tree) {
    return check_node(program, tree.root, tree.bound, format_atom(tree.root.atom, tree.bound));
}

}  // namespace laxlog
