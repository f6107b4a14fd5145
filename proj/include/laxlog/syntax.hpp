#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace laxlog {

// Thrown when an operation is handed values over incompatible contexts.
struct context_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct parse_error : std::runtime_error {
    parse_error(int line, int col, const std::string& what)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + what),
          line(line), col(col) {}
    int line;
    int col;
};

// Function and predicate symbols with their arities. Symbols are kept in
// sorted maps; "signature order" everywhere in this library means the
// iteration order of these maps.
struct Signature {
    std::map<std::string, int> functions;
    std::map<std::string, int> predicates;

    bool operator==(const Signature&) const = default;
};

// A first-order term over a context of variables x1..xn. Variables are
// 0-based context indices; `var < 0` means an application of `sym` to `args`.
struct Term {
    int var = -1;
    std::string sym;
    std::vector<Term> args;

    static Term variable(int index) {
        Term t;
        t.var = index;
        return t;
    }
    static Term app(std::string symbol, std::vector<Term> arguments = {}) {
        Term t;
        t.sym = std::move(symbol);
        t.args = std::move(arguments);
        return t;
    }

    bool is_var() const { return var >= 0; }

    bool operator==(const Term&) const = default;
};

// Total order on terms: variables first by index, then applications by
// symbol and argument list. Used for deterministic set representations.
int compare(const Term& a, const Term& b);

int term_depth(const Term& t);
int max_var(const Term& t);  // -1 when no variable occurs

// A predicate applied to terms, together with the size of the variable
// context it lives in. Two atoms with the same text but different contexts
// are different values.
struct Atom {
    std::string pred;
    std::vector<Term> args;
    int ctx = 0;

    bool operator==(const Atom&) const = default;
};

int compare(const Atom& a, const Atom& b);
inline bool atom_less(const Atom& a, const Atom& b) { return compare(a, b) < 0; }

int max_var(const Atom& a);

// Re-tag an atom over context n as the same atom over context n' >= n.
Atom widen(const Atom& a, int ctx);

// head :- body. The context is shared by head and body and is tight: the
// clause's variables are exactly the indices 0..ctx-1, numbered by first
// occurrence in the clause text. `existential_vars` caches the indices that
// occur in the body but not in the head.
struct Clause {
    Atom head;
    std::vector<Atom> body;
    int ctx = 0;
    std::vector<int> existential_vars;

    bool operator==(const Clause&) const = default;
};

// Builds a clause from head and body, deriving the (tight) context and the
// existential-variable cache. Throws context_error if variable indices are
// not contiguous from 0.
Clause make_clause(Atom head, std::vector<Atom> body);

struct Program {
    Signature sig;
    std::vector<Clause> clauses;
};

// Concrete syntax:
//   clause  ::= atom [ ":-" atom { "," atom } ] "."
//   atom    ::= symbol [ "(" term { "," term } ")" ]
//   term    ::= variable | symbol [ "(" term { "," term } ")" ]
//   symbol    matches [a-z0-9][A-Za-z0-9_]*, except the canonical variable
//             forms below
//   variable  matches [A-Z_][A-Za-z0-9_]* or the canonical form x<k> (k >= 1),
//             which denotes context index k-1
//   "%" starts a line comment
// A clause may use named variables or canonical x<k> variables, but not both.
// Names of the form z<k> are reserved for printing existential variables and
// are rejected. The signature is inferred from use; inconsistent arities are
// reported with positions.
Program parse_program(std::string_view text);

// Parses a single atom (a query). If `names` is given it receives the source
// spelling of each context variable, in index order.
Atom parse_atom(std::string_view text, const Signature& sig,
                std::vector<std::string>* names = nullptr);

struct Classification {
    bool existential = false;
    std::vector<size_t> witnesses;  // 0-based clause indices
};

Classification classify(const Program& program);

// Printing. Context variables render as x1..xn; indices at or beyond
// `bound` render as existentials z1, z2, ... (callers that have no
// existentials pass no bound).
std::string format_term(const Term& t, int bound = -1);
std::string format_atom(const Atom& a, int bound = -1);
std::string format_clause(const Clause& c);
std::string format_program(const Program& p);

// All terms over x1..xn whose depth is at most d, in a fixed order:
// variables, then a layer per depth with symbols in signature order and
// argument tuples in odometer order.
std::vector<Term> enumerate_terms(const Signature& sig, int n, int d);

// All atoms over x1..xn whose argument terms have depth at most d.
std::vector<Atom> enumerate_atoms(const Signature& sig, int n, int d);

}  // namespace laxlog
