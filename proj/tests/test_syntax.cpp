#include "doctest.h"
#include "laxlog/generators.hpp"
#include "support.hpp"

#include <algorithm>

using namespace laxlog;
using namespace laxlog::testing;

TEST_CASE("listnat parses into four clauses with inferred signature") {
    Program p = listnat();
    REQUIRE(p.clauses.size() == 4);
    CHECK(p.sig.functions == std::map<std::string, int>{{"0", 0}, {"cons", 2}, {"nil", 0}, {"s", 1}});
    CHECK(p.sig.predicates == std::map<std::string, int>{{"list", 1}, {"nat", 1}});

    CHECK(p.clauses[0].head == Atom{"nat", {c("0")}, 0});
    CHECK(p.clauses[0].body.empty());
    CHECK(p.clauses[1].head == Atom{"nat", {f("s", {v(0)})}, 1});
    CHECK(p.clauses[1].body == std::vector<Atom>{Atom{"nat", {v(0)}, 1}});
    CHECK(p.clauses[3].ctx == 2);
    CHECK(p.clauses[3].body == std::vector<Atom>{Atom{"nat", {v(0)}, 2}, Atom{"list", {v(1)}, 2}});
}

TEST_CASE("empty input parses to an empty program") {
    Program p = parse_program("");
    CHECK(p.clauses.empty());
    CHECK(p.sig.functions.empty());
    CHECK(p.sig.predicates.empty());

    Program comments = parse_program("% nothing here\n  % still nothing\n");
    CHECK(comments.clauses.empty());
}

TEST_CASE("body-only variables are recorded as existential") {
    Program p = parse_program("connected(X,Y) :- edge(X,Z), connected(Z,Y).");
    REQUIRE(p.clauses.size() == 1);
    CHECK(p.clauses[0].ctx == 3);
    CHECK(p.clauses[0].existential_vars == std::vector<int>{2});
}

TEST_CASE("classification of the corpus") {
    CHECK_FALSE(classify(listnat()).existential);
    CHECK_FALSE(classify(bad()).existential);
    CHECK_FALSE(classify(ground_abcd()).existential);

    Classification gc_cls = classify(gc());
    CHECK(gc_cls.existential);
    CHECK(gc_cls.witnesses == std::vector<size_t>{1});
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_program("nat(0)"), parse_error);  // missing period
    CHECK_THROWS_AS(parse_program("nat(X) :- ."), parse_error);
    CHECK_THROWS_AS(parse_program("p(x1, X)."), parse_error);  // mixed variable styles

    try {
        parse_program("nat(0).\nnat(s(X), Y) :- nat(X).");
        FAIL("predicate arity conflict not reported");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("arity") != std::string::npos);
    }
    // the same applies to function symbols
    CHECK_THROWS_AS(parse_program("nat(s(X)) :- nat(X). list(s(X,Y))."), parse_error);
}

TEST_CASE("formatting") {
    CHECK(format_atom(Atom{"nat", {f("s", {c("0")})}, 0}) == "nat(s(0))");
    CHECK(format_term(v(0)) == "x1");
    CHECK(format_atom(Atom{"connected", {v(0), v(2)}, 2}, 2) == "connected(x1,z1)");
}

TEST_CASE("program text round-trips") {
    for (const char* name : {"listnat.lp", "listnat_plus.lp", "gc.lp", "bad.lp", "ground_abcd.lp"}) {
        Program p = load_fixture(name);
        Program again = parse_program(format_program(p));
        CHECK(again.clauses == p.clauses);
        CHECK(again.sig == p.sig);
    }
}

TEST_CASE("random atoms round-trip through the printer") {
    Program p = listnat();
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        Atom a = tighten(random_atom(rng, p.sig, rng.below(4), 2));
        Atom back = parse_atom(format_atom(a), p.sig);
        CHECK(back == a);
    }
}

TEST_CASE("atom enumeration at small bounds") {
    Program p = listnat();
    auto ground0 = enumerate_atoms(p.sig, 0, 0);
    std::vector<Atom> expected = {
        Atom{"list", {c("0")}, 0}, Atom{"list", {c("nil")}, 0},
        Atom{"nat", {c("0")}, 0}, Atom{"nat", {c("nil")}, 0}};
    CHECK(ground0 == expected);

    auto one0 = enumerate_atoms(p.sig, 1, 0);
    CHECK(one0.size() == 6);
    CHECK(std::find(one0.begin(), one0.end(), Atom{"nat", {v(0)}, 1}) != one0.end());
    CHECK(std::find(one0.begin(), one0.end(), Atom{"list", {v(0)}, 1}) != one0.end());

    // no ground terms without constants: binary predicates have no instances
    Program g = gc();
    CHECK(enumerate_atoms(g.sig, 0, 3).empty());
}

TEST_CASE("atom enumeration is monotone under context inclusion") {
    Program p = listnat();
    for (int n = 0; n <= 1; ++n) {
        for (int d = 0; d <= 1; ++d) {
            auto small = enumerate_atoms(p.sig, n, d);
            auto bigger_ctx = enumerate_atoms(p.sig, n + 1, d);
            auto deeper = enumerate_atoms(p.sig, n, d + 1);
            Substitution inc = injection_subst(canonical_inclusion(n, n + 1));
            for (const Atom& a : small) {
                CHECK(std::find(bigger_ctx.begin(), bigger_ctx.end(), apply(inc, a)) !=
                      bigger_ctx.end());
                CHECK(std::find(deeper.begin(), deeper.end(), a) != deeper.end());
            }
        }
    }
}

TEST_CASE("enumerated atoms have no duplicates") {
    Program p = listnat();
    auto atoms = enumerate_atoms(p.sig, 1, 1);
    auto copy = atoms;
    std::sort(copy.begin(), copy.end(), atom_less);
    CHECK(std::adjacent_find(copy.begin(), copy.end()) == copy.end());
}
