#include "doctest.h"
#include "support.hpp"

#include <algorithm>

using namespace laxlog;
using namespace laxlog::testing;

TEST_CASE("the extended list program gives the ground list two derivations") {
    Program p = listnat_plus();
    CoTree t = build_cotree(p, atom(p, "list(cons(0,nil))"), 4);

    REQUIRE(t.root.or_children.size() == 2);
    const OrNode& via_cons = t.root.or_children[0];
    const OrNode& via_zero = t.root.or_children[1];
    CHECK(via_cons.clause_index == 3);
    CHECK(via_zero.clause_index == 4);

    REQUIRE(via_cons.and_children.size() == 2);
    CHECK(via_cons.and_children[0].atom == Atom{"nat", {c("0")}, 0});
    CHECK(via_cons.and_children[1].atom == Atom{"list", {c("nil")}, 0});
    REQUIRE(via_zero.and_children.size() == 1);
    CHECK(via_zero.and_children[0].atom == Atom{"list", {c("nil")}, 0});

    // each leaf closes through its fact with no further children
    for (const OrNode& o : t.root.or_children)
        for (const AndNode& c : o.and_children) {
            REQUIRE(c.or_children.size() == 1);
            CHECK(c.or_children[0].and_children.empty());
        }

    CHECK_FALSE(check_tree_wellformed(p, t));
}

TEST_CASE("the open list pattern stops after one generation") {
    Program p = listnat_plus();
    CoTree t = build_cotree(p, atom(p, "list(cons(x1,x2))"), 2);

    REQUIRE(t.root.or_children.size() == 1);
    CHECK(t.root.or_children[0].clause_index == 3);
    REQUIRE(t.root.or_children[0].and_children.size() == 2);
    CHECK(t.root.or_children[0].and_children[0].atom == Atom{"nat", {v(0)}, 2});
    CHECK(t.root.or_children[0].and_children[1].atom == Atom{"list", {v(1)}, 2});
    for (const AndNode& c : t.root.or_children[0].and_children) {
        CHECK(c.or_children.empty());
        CHECK(c.frontier == Frontier::Expanded);
    }
}

TEST_CASE("the connectivity tree introduces a fresh variable per generation") {
    Program p = gc();
    CoTree t = build_cotree(p, atom(p, "connected(x1,x2)"), 4);

    REQUIRE(t.root.or_children.size() == 1);
    const OrNode& o1 = t.root.or_children[0];
    CHECK(o1.clause_index == 1);
    REQUIRE(o1.and_children.size() == 2);
    CHECK(o1.and_children[0].atom == Atom{"edge", {v(0), v(2)}, 3});
    CHECK(o1.and_children[1].atom == Atom{"connected", {v(2), v(1)}, 3});
    CHECK(o1.and_children[0].or_children.empty());

    const AndNode& rec = o1.and_children[1];
    REQUIRE(rec.or_children.size() == 1);
    CHECK(rec.or_children[0].and_children[0].atom == Atom{"edge", {v(2), v(3)}, 4});
    CHECK(rec.or_children[0].and_children[1].atom == Atom{"connected", {v(3), v(1)}, 4});
    CHECK(rec.or_children[0].and_children[1].exist_count == 2);

    CHECK_FALSE(check_tree_wellformed(p, t));
}

TEST_CASE("the ground four-atom program unfolds through its one recursion") {
    Program p = ground_abcd();
    CoTree t = build_cotree(p, atom(p, "a"), 6);

    REQUIRE(t.root.or_children.size() == 2);
    CHECK(t.root.or_children[0].and_children.size() == 2);  // b, c
    CHECK(t.root.or_children[1].and_children.size() == 2);  // b, d
    const AndNode& d = t.root.or_children[1].and_children[1];
    CHECK(d.atom == Atom{"d", {}, 0});
    REQUIRE(d.or_children.size() == 1);
    CHECK(d.or_children[0].and_children[0].atom == Atom{"a", {}, 0});
    CHECK(d.or_children[0].and_children[1].atom == Atom{"c", {}, 0});
}

TEST_CASE("truncation coherence") {
    Program p = listnat_plus();
    for (const char* goal : {"list(cons(0,nil))", "list(cons(x1,x2))"}) {
        CoTree deep = build_cotree(p, atom(p, goal), 6);
        for (int d = 0; d <= 6; ++d)
            CHECK(truncate(deep, d) == build_cotree(p, atom(p, goal), d));
    }
    Program g = gc();
    CoTree deep = build_cotree(g, atom(g, "connected(x1,x2)"), 5);
    for (int d = 0; d <= 5; ++d)
        CHECK(truncate(deep, d) == build_cotree(g, atom(g, "connected(x1,x2)"), d));
}

TEST_CASE("tree order is reflexive and respects truncation") {
    Program p = listnat_plus();
    CoTree t = build_cotree(p, atom(p, "list(cons(0,nil))"), 4);
    CHECK(tree_leq(t, t, 4).holds);

    CoTree shallow = truncate(t, 1);
    CHECK(tree_leq(shallow, t, 4).holds);

    CHECK_THROWS_AS(tree_leq(t, build_cotree(p, atom(p, "list(nil)"), 4), 4), context_error);
}

TEST_CASE("tree order is transitive along a truncation chain") {
    Program p = listnat_plus();
    CoTree full = build_cotree(p, atom(p, "list(cons(0,nil))"), 5);
    CoTree mid = truncate(full, 3);
    CoTree low = truncate(full, 1);
    CHECK(tree_leq(low, mid, 5).holds);
    CHECK(tree_leq(mid, full, 5).holds);
    CHECK(tree_leq(low, full, 5).holds);

    // and along a substitution chain
    Program g = gc();
    Substitution collapse;
    collapse.source = 1;
    collapse.target = 2;
    collapse.assignment = {v(0), v(0)};
    CoTree moved = subst_tree(g, collapse, build_cotree(g, atom(g, "connected(x1,x2)"), 4));
    CoTree moved_low = truncate(moved, 2);
    CoTree built = build_cotree(g, atom(g, "connected(x1,x1)"), 4);
    CHECK(tree_leq(moved_low, moved, 4).holds);
    CHECK(tree_leq(moved, built, 4).holds);
    CHECK(tree_leq(moved_low, built, 4).holds);
}

TEST_CASE("substituted trees sit below built trees at depth four across a slice") {
    for (const char* name : {"listnat.lp", "gc.lp"}) {
        Program p = load_fixture(name);
        for (int m = 0; m <= 2; ++m) {
            std::vector<Atom> atoms = enumerate_atoms(p.sig, m, 0);
            for (int n = 0; n <= 2; ++n) {
                for (const Substitution& sub : enumerate_substitutions(p.sig, n, m, 1)) {
                    for (const Atom& a : atoms) {
                        CoTree t = build_cotree(p, a, 4);
                        CoTree moved = subst_tree(p, sub, t);
                        CoTree built = build_cotree(p, apply(sub, a), 4);
                        CHECK(tree_leq(moved, built, 4).holds);
                    }
                }
            }
        }
    }
}

TEST_CASE("substituted trees sit below built trees, strictly for the diagonal") {
    Program p = gc();
    Substitution collapse;
    collapse.source = 1;
    collapse.target = 2;
    collapse.assignment = {v(0), v(0)};

    CoTree open_tree = build_cotree(p, atom(p, "connected(x1,x2)"), 4);
    CoTree moved = subst_tree(p, collapse, open_tree);
    CoTree diagonal = build_cotree(p, atom(p, "connected(x1,x1)"), 4);

    CHECK(moved.root.atom == Atom{"connected", {v(0), v(0)}, 1});
    CHECK(tree_leq(moved, diagonal, 4).holds);

    // the built diagonal tree has the extra reflexive branch everywhere
    TreeOrderWitness converse = tree_leq(diagonal, moved, 4);
    CHECK_FALSE(converse.holds);
    CHECK(diagonal.root.or_children.size() == 2);
    CHECK(moved.root.or_children.size() == 1);

    // node by node the moved tree is the original with x2 replaced by x1
    const OrNode& o = moved.root.or_children[0];
    CHECK(o.and_children[0].atom == Atom{"edge", {v(0), v(1)}, 2});
    CHECK(o.and_children[1].atom == Atom{"connected", {v(1), v(0)}, 2});
}

TEST_CASE("identity substitution leaves a tree unchanged") {
    Program p = listnat_plus();
    CoTree t = build_cotree(p, atom(p, "list(cons(x1,x2))"), 3);
    CoTree same = subst_tree(p, identity_subst(2), t);
    CHECK(same == t);
}

TEST_CASE("substitution then comparison against the built tree for the list program") {
    Program p = listnat();
    Substitution ground;
    ground.source = 0;
    ground.target = 2;
    ground.assignment = {c("0"), c("nil")};

    CoTree open_tree = build_cotree(p, atom(p, "list(cons(x1,x2))"), 6);
    CoTree moved = subst_tree(p, ground, open_tree);
    CoTree built = build_cotree(p, atom(p, "list(cons(0,nil))"), 6);
    CHECK(tree_leq(moved, built, 6).holds);
    // the built tree genuinely exceeds the moved one: its leaves close
    // through facts while the moved leaves are bare
    CHECK_FALSE(tree_leq(built, moved, 6).holds);
    CHECK(count_or_nodes(built) > count_or_nodes(moved));
}

TEST_CASE("substitution collapses duplicate children") {
    Program p = parse_program("p(X,Y) :- q(X), q(Y). q(a).");
    CoTree t = build_cotree(p, atom(p, "p(x1,x2)"), 2);
    REQUIRE(t.root.or_children.size() == 1);
    CHECK(t.root.or_children[0].and_children.size() == 2);

    Substitution collapse;
    collapse.source = 1;
    collapse.target = 2;
    collapse.assignment = {v(0), v(0)};
    CoTree moved = subst_tree(p, collapse, t);
    CHECK(moved.root.or_children[0].and_children.size() == 1);

    CoTree built = build_cotree(p, atom(p, "p(x1,x1)"), 2);
    CHECK(moved == built);
}

TEST_CASE("ascii export marks or-nodes and truncation") {
    Program p = gc();
    CoTree t = build_cotree(p, atom(p, "connected(x1,x2)"), 2);
    std::string ascii = export_tree(t, TreeFormat::Ascii);
    CHECK(ascii.find("connected(x1,x2)") != std::string::npos);
    CHECK(ascii.find("• clause 2") != std::string::npos);
    CHECK(ascii.find("edge(x1,z1)") != std::string::npos);
    CHECK(ascii.find("...") != std::string::npos);  // truncation marker
}

TEST_CASE("dot export uses point-shaped or-nodes") {
    Program p = listnat_plus();
    CoTree t = build_cotree(p, atom(p, "list(cons(0,nil))"), 4);
    std::string dot = export_tree(t, TreeFormat::Dot);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '\n') > 10);
    // two or-nodes under the root
    CHECK(dot.find("shape=point") != std::string::npos);
}

TEST_CASE("single truncated root exports on its own") {
    Program p = listnat();
    CoTree t = build_cotree(p, atom(p, "nat(0)"), 0);
    CHECK(t.root.frontier == Frontier::Truncated);
    std::string ascii = export_tree(t, TreeFormat::Ascii);
    CHECK(ascii == "nat(0) ...\n");
    std::string json = export_tree(t, TreeFormat::Json);
    CHECK(json.find("\"truncated\": true") != std::string::npos);
}
