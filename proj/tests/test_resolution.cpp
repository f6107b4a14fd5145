#include "doctest.h"
#include "support.hpp"

using namespace laxlog;
using namespace laxlog::testing;

namespace {

// Replays a proof: each node's matcher must send the clause head to the
// node's goal (over the matcher's source context), and the children must
// cover the instantiated body exactly.
bool replay(const Program& p, const ProofNode& node) {
    const Clause& clause = p.clauses[node.clause_index];
    Atom instantiated = apply(node.matcher, clause.head);
    if (!(instantiated == widen(node.goal, node.matcher.source))) return false;
    std::vector<Atom> expected;
    for (const Atom& b : clause.body) {
        Atom inst = apply(node.matcher, b);
        if (std::find(expected.begin(), expected.end(), inst) == expected.end())
            expected.push_back(std::move(inst));
    }
    if (expected.size() != node.children.size()) return false;
    for (size_t i = 0; i < expected.size(); ++i) {
        if (!(node.children[i].goal == expected[i])) return false;
        if (!replay(p, node.children[i])) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("term matching proves ground list membership") {
    Program p = listnat();
    TmResult r = tm_prove(p, atom(p, "list(cons(0,nil))"), 8);
    CHECK(r.outcome == TmOutcome::Proved);
    REQUIRE(r.proof);
    CHECK(r.proof->clause_index == 3);
    CHECK(replay(p, *r.proof));
}

TEST_CASE("term matching fails finitely on an open list pattern") {
    Program p = listnat();
    CHECK(tm_prove(p, atom(p, "list(cons(x1,x2))"), 8).outcome == TmOutcome::FailedFinite);
}

TEST_CASE("the diagonal goal is proved by the reflexive clause") {
    Program p = gc();
    TmResult r = tm_prove(p, atom(p, "connected(x1,x1)"), 2);
    CHECK(r.outcome == TmOutcome::Proved);
    REQUIRE(r.proof);
    CHECK(r.proof->clause_index == 0);
}

TEST_CASE("the open connectivity goal exhausts any fuel without failing finitely") {
    Program p = gc();
    for (int fuel : {0, 1, 2, 5, 12})
        CHECK(tm_prove(p, atom(p, "connected(x1,x2)"), fuel).outcome ==
              TmOutcome::FuelExhausted);
}

TEST_CASE("self-referential programs exhaust fuel") {
    Program p = bad();
    CHECK(tm_prove(p, atom(p, "bad(x1)"), 30).outcome == TmOutcome::FuelExhausted);
}

TEST_CASE("proved outcomes are monotone in fuel") {
    Program p = listnat();
    Atom goal = atom(p, "list(cons(0,nil))");
    int first_proved = -1;
    for (int fuel = 0; fuel <= 10; ++fuel) {
        TmOutcome o = tm_prove(p, goal, fuel).outcome;
        if (o == TmOutcome::Proved && first_proved < 0) first_proved = fuel;
        if (first_proved >= 0) CHECK(o == TmOutcome::Proved);
    }
    CHECK(first_proved >= 0);

    Atom open_goal = atom(p, "list(cons(x1,x2))");
    int first_failed = -1;
    for (int fuel = 0; fuel <= 10; ++fuel) {
        TmOutcome o = tm_prove(p, open_goal, fuel).outcome;
        if (o == TmOutcome::FailedFinite && first_failed < 0) first_failed = fuel;
        if (first_failed >= 0) CHECK(o == TmOutcome::FailedFinite);
    }
    CHECK(first_failed >= 0);
}

TEST_CASE("fuel zero cannot decide anything") {
    Program p = listnat();
    CHECK(tm_prove(p, atom(p, "nat(0)"), 0).outcome == TmOutcome::FuelExhausted);
}

TEST_CASE("sld finds the canonical list instantiation first") {
    Program p = listnat();
    auto answers = sld_solve(p, {atom(p, "list(cons(x1,x2))")}, 6, 3);
    REQUIRE(!answers.empty());
    CHECK(answers[0].answer.assignment[0] == c("0"));
    CHECK(answers[0].answer.assignment[1] == c("nil"));
    CHECK(answers[0].steps == 3);
}

TEST_CASE("sld answers the open connectivity goal by collapsing the variables") {
    Program p = gc();
    auto answers = sld_solve(p, {atom(p, "connected(x1,x2)")}, 4, 5);
    REQUIRE(!answers.empty());
    CHECK(answers[0].steps == 1);
    CHECK(answers[0].answer.to_string() == "{x2->x1}");
    // the recursive clause never completes: nothing else is found
    CHECK(answers.size() == 1);
}

TEST_CASE("sld on a divergent program yields an empty stream") {
    Program p = bad();
    CHECK(sld_solve(p, {atom(p, "bad(x1)")}, 10, 5).empty());
}

TEST_CASE("sld enumerates successive naturals fairly") {
    Program p = listnat();
    auto answers = sld_solve(p, {atom(p, "nat(x1)")}, 6, 4);
    REQUIRE(answers.size() == 4);
    CHECK(answers[0].answer.assignment[0] == c("0"));
    CHECK(answers[1].answer.assignment[0] == f("s", {c("0")}));
    CHECK(answers[2].answer.assignment[0] == f("s", {f("s", {c("0")})}));
}

TEST_CASE("an empty goal list succeeds immediately with the identity") {
    Program p = listnat();
    auto answers = sld_solve(p, {}, 3, 2);
    REQUIRE(answers.size() == 1);
    CHECK(answers[0].steps == 0);
    CHECK(answers[0].answer.assignment.empty());
}

TEST_CASE("conjunctive goals share their context") {
    Program p = listnat();
    Atom left{"nat", {v(0)}, 2};
    Atom right{"list", {v(1)}, 2};
    auto answers = sld_solve(p, {left, right}, 4, 2);
    REQUIRE(!answers.empty());
    CHECK(answers[0].answer.assignment[0] == c("0"));
    CHECK(answers[0].answer.assignment[1] == c("nil"));

    CHECK_THROWS_AS(sld_solve(p, {left, atom(p, "list(x1)")}, 4, 1), context_error);
}

TEST_CASE("every sld answer instantiates to a provable goal") {
    Program p = listnat();
    BridgeReport r = verify_bridge(p, atom(p, "list(cons(x1,x2))"), 8);
    CHECK(!r.checked.empty());
    CHECK(r.ok());

    Program g = gc();
    BridgeReport rg = verify_bridge(g, atom(g, "connected(x1,x2)"), 8);
    REQUIRE(rg.checked.size() == 1);
    CHECK(rg.checked[0].instance == "connected(x1,x1)");
    CHECK(rg.ok());
}

TEST_CASE("bridge on an empty program passes vacuously") {
    Program p = parse_program("");
    p.sig.predicates["q"] = 1;
    p.sig.functions["k"] = 0;
    BridgeReport r = verify_bridge(p, Atom{"q", {c("k")}, 0}, 6);
    CHECK(r.checked.empty());
    CHECK(r.ok());
}

TEST_CASE("bridge holds on seeded random programs without existential variables") {
    Rng rng(2024);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        Program p = random_program(rng, false);
        REQUIRE(!classify(p).existential);
        for (int n = 0; n <= 1; ++n) {
            for (const Atom& goal : enumerate_atoms(p.sig, n, 0)) {
                BridgeReport r = verify_bridge(p, goal, 6);
                ++checked;
                CHECK(r.ok());
            }
        }
    }
    CHECK(checked > 200);
}
