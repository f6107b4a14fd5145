#include "laxlog/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace laxlog {

int compare(const Term& a, const Term& b) {
    if (a.is_var() || b.is_var()) {
        if (a.is_var() && b.is_var()) return a.var - b.var;
        return a.is_var() ? -1 : 1;
    }
    if (int c = a.sym.compare(b.sym); c != 0) return c;
    if (a.args.size() != b.args.size())
        return a.args.size() < b.args.size() ? -1 : 1;
    for (size_t i = 0; i < a.args.size(); ++i)
        if (int c = compare(a.args[i], b.args[i]); c != 0) return c;
    return 0;
}

int term_depth(const Term& t) {
    if (t.is_var() || t.args.empty()) return 0;
    int m = 0;
    for (const Term& a : t.args) m = std::max(m, term_depth(a));
    return 1 + m;
}

int max_var(const Term& t) {
    if (t.is_var()) return t.var;
    int m = -1;
    for (const Term& a : t.args) m = std::max(m, max_var(a));
    return m;
}

int compare(const Atom& a, const Atom& b) {
    if (int c = a.pred.compare(b.pred); c != 0) return c;
    if (a.args.size() != b.args.size())
        return a.args.size() < b.args.size() ? -1 : 1;
    for (size_t i = 0; i < a.args.size(); ++i)
        if (int c = compare(a.args[i], b.args[i]); c != 0) return c;
    return a.ctx - b.ctx;
}

int max_var(const Atom& a) {
    int m = -1;
    for (const Term& t : a.args) m = std::max(m, max_var(t));
    return m;
}

Atom widen(const Atom& a, int ctx) {
    if (ctx < a.ctx) throw context_error("widen: target context is smaller");
    Atom out = a;
    out.ctx = ctx;
    return out;
}

namespace {

void collect_vars(const Term& t, std::set<int>& out) {
    if (t.is_var()) {
        out.insert(t.var);
        return;
    }
    for (const Term& a : t.args) collect_vars(a, out);
}

void collect_vars(const Atom& a, std::set<int>& out) {
    for (const Term& t : a.args) collect_vars(t, out);
}

}  // namespace

Clause make_clause(Atom head, std::vector<Atom> body) {
    std::set<int> head_vars, all_vars;
    collect_vars(head, head_vars);
    all_vars = head_vars;
    for (const Atom& a : body) collect_vars(a, all_vars);

    int ctx = all_vars.empty() ? 0 : *all_vars.rbegin() + 1;
    if (static_cast<int>(all_vars.size()) != ctx)
        throw context_error("make_clause: variable indices must be contiguous from 0");

    Clause c;
    c.ctx = ctx;
    c.head = widen(std::move(head), ctx);
    for (Atom& a : body) c.body.push_back(widen(std::move(a), ctx));
    for (int v = 0; v < ctx; ++v)
        if (!head_vars.count(v)) c.existential_vars.push_back(v);
    return c;
}

Classification classify(const Program& program) {
    Classification r;
    for (size_t i = 0; i < program.clauses.size(); ++i)
        if (!program.clauses[i].existential_vars.empty()) r.witnesses.push_back(i);
    r.existential = !r.witnesses.empty();
    return r;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

enum class Tok { Symbol, Variable, LParen, RParen, Comma, Period, Turnstile, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Tok::End, "", line, col};
        char c = text_[pos_];
        if (c == '(') return advance({Tok::LParen, "(", line, col});
        if (c == ')') return advance({Tok::RParen, ")", line, col});
        if (c == ',') return advance({Tok::Comma, ",", line, col});
        if (c == '.') return advance({Tok::Period, ".", line, col});
        if (c == ':') {
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                pos_ += 2;
                col_ += 2;
                return {Tok::Turnstile, ":-", line, col};
            }
            throw parse_error(line, col, "expected ':-'");
        }
        if (std::isupper(static_cast<unsigned char>(c)) || c == '_')
            return {Tok::Variable, ident(), line, col};
        if (std::islower(static_cast<unsigned char>(c)) ||
            std::isdigit(static_cast<unsigned char>(c)))
            return {Tok::Symbol, ident(), line, col};
        throw parse_error(line, col, std::string("unexpected character '") + c + "'");
    }

  private:
    Token advance(Token t) {
        ++pos_;
        ++col_;
        return t;
    }

    std::string ident() {
        size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                ++pos_;
                ++col_;
            } else {
                break;
            }
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++pos_;
                ++line_;
                col_ = 1;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
                ++col_;
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// Is `name` the canonical spelling x<k> (k >= 1, no leading zero)?
std::optional<int> canonical_index(const std::string& name, char prefix) {
    if (name.size() < 2 || name[0] != prefix) return std::nullopt;
    if (name[1] == '0') return std::nullopt;
    int value = 0;
    for (size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        value = value * 10 + (name[i] - '0');
    }
    return value - 1;
}

class Parser {
  public:
    explicit Parser(std::string_view text) : lexer_(text) { shift(); }

    Program parse_program() {
        Program p;
        while (cur_.kind != Tok::End) {
            begin_clause();
            Atom head = parse_atom_body(p.sig, true);
            std::vector<Atom> body;
            if (cur_.kind == Tok::Turnstile) {
                shift();
                body.push_back(parse_atom_body(p.sig, true));
                while (cur_.kind == Tok::Comma) {
                    shift();
                    body.push_back(parse_atom_body(p.sig, true));
                }
            }
            expect(Tok::Period, "expected '.' at end of clause");
            int ctx = static_cast<int>(var_names_.size());
            head = widen(head, ctx);
            for (Atom& a : body) a = widen(a, ctx);
            p.clauses.push_back(make_clause(std::move(head), std::move(body)));
        }
        return p;
    }

    Atom parse_single_atom(Signature sig, std::vector<std::string>* names) {
        begin_clause();
        // Novel symbols are inferred; known ones are held to their arities.
        Atom a = parse_atom_body(sig, true);
        expect(Tok::End, "expected end of input after atom");
        a = widen(a, static_cast<int>(var_names_.size()));
        if (names) *names = var_names_;
        return a;
    }

  private:
    void begin_clause() {
        var_names_.clear();
        var_index_.clear();
        saw_named_ = saw_canonical_ = false;
    }

    void shift() { cur_ = lexer_.next(); }

    void expect(Tok k, const std::string& msg) {
        if (cur_.kind != k) throw parse_error(cur_.line, cur_.col, msg);
        shift();
    }

    int variable_index(const Token& tok, bool canonical) {
        if (canonical) {
            if (saw_named_)
                throw parse_error(tok.line, tok.col,
                                  "cannot mix canonical and named variables in one clause");
            saw_canonical_ = true;
            int index = *canonical_index(tok.text, 'x');
            while (static_cast<int>(var_names_.size()) <= index)
                var_names_.push_back("x" + std::to_string(var_names_.size() + 1));
            return index;
        }
        if (saw_canonical_)
            throw parse_error(tok.line, tok.col,
                              "cannot mix canonical and named variables in one clause");
        saw_named_ = true;
        auto it = var_index_.find(tok.text);
        if (it != var_index_.end()) return it->second;
        int index = static_cast<int>(var_names_.size());
        var_names_.push_back(tok.text);
        var_index_[tok.text] = index;
        return index;
    }

    Term parse_term(Signature& sig, bool infer) {
        Token tok = cur_;
        if (tok.kind == Tok::Variable) {
            shift();
            return Term::variable(variable_index(tok, false));
        }
        if (tok.kind != Tok::Symbol)
            throw parse_error(tok.line, tok.col, "expected a term");
        if (canonical_index(tok.text, 'x')) {
            shift();
            return Term::variable(variable_index(tok, true));
        }
        if (canonical_index(tok.text, 'z'))
            throw parse_error(tok.line, tok.col,
                              "names of the form z<k> are reserved for existential variables");
        shift();
        std::vector<Term> args;
        if (cur_.kind == Tok::LParen) {
            shift();
            args.push_back(parse_term(sig, infer));
            while (cur_.kind == Tok::Comma) {
                shift();
                args.push_back(parse_term(sig, infer));
            }
            expect(Tok::RParen, "expected ')'");
        }
        record_arity(sig.functions, tok, static_cast<int>(args.size()), infer, "function symbol");
        return Term::app(tok.text, std::move(args));
    }

    Atom parse_atom_body(Signature& sig, bool infer) {
        Token tok = cur_;
        if (tok.kind != Tok::Symbol || canonical_index(tok.text, 'x') ||
            canonical_index(tok.text, 'z'))
            throw parse_error(tok.line, tok.col, "expected a predicate symbol");
        shift();
        std::vector<Term> args;
        if (cur_.kind == Tok::LParen) {
            shift();
            args.push_back(parse_term(sig, infer));
            while (cur_.kind == Tok::Comma) {
                shift();
                args.push_back(parse_term(sig, infer));
            }
            expect(Tok::RParen, "expected ')'");
        }
        record_arity(sig.predicates, tok, static_cast<int>(args.size()), infer, "predicate symbol");
        Atom a;
        a.pred = tok.text;
        a.args = std::move(args);
        return a;
    }

    void record_arity(std::map<std::string, int>& table, const Token& tok, int arity,
                      bool infer, const char* what) {
        auto it = table.find(tok.text);
        if (it == table.end()) {
            if (!infer)
                throw parse_error(tok.line, tok.col,
                                  std::string("unknown ") + what + " '" + tok.text + "'");
            table[tok.text] = arity;
        } else if (it->second != arity) {
            throw parse_error(tok.line, tok.col,
                              std::string(what) + " '" + tok.text + "' used with arity " +
                                  std::to_string(arity) + ", previously " +
                                  std::to_string(it->second));
        }
    }

    Lexer lexer_;
    Token cur_{Tok::End, "", 0, 0};
    std::vector<std::string> var_names_;
    std::map<std::string, int> var_index_;
    bool saw_named_ = false;
    bool saw_canonical_ = false;
};

}  // namespace

Program parse_program(std::string_view text) {
    return Parser(text).parse_program();
}

Atom parse_atom(std::string_view text, const Signature& sig, std::vector<std::string>* names) {
    // Unknown symbols in a query are inferred rather than rejected: a query
    // may mention constants that happen not to occur in the program.
    Signature extended = sig;
    Parser p(text);
    return p.parse_single_atom(extended, names);
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

void print_term(std::ostringstream& out, const Term& t, int bound) {
    if (t.is_var()) {
        if (bound >= 0 && t.var >= bound)
            out << 'z' << (t.var - bound + 1);
        else
            out << 'x' << (t.var + 1);
        return;
    }
    out << t.sym;
    if (!t.args.empty()) {
        out << '(';
        for (size_t i = 0; i < t.args.size(); ++i) {
            if (i) out << ',';
            print_term(out, t.args[i], bound);
        }
        out << ')';
    }
}

}  // namespace

std::string format_term(const Term& t, int bound) {
    std::ostringstream out;
    print_term(out, t, bound);
    return out.str();
}

std::string format_atom(const Atom& a, int bound) {
    std::ostringstream out;
    out << a.pred;
    if (!a.args.empty()) {
        out << '(';
        for (size_t i = 0; i < a.args.size(); ++i) {
            if (i) out << ',';
            print_term(out, a.args[i], bound);
        }
        out << ')';
    }
    return out.str();
}

std::string format_clause(const Clause& c) {
    std::ostringstream out;
    out << format_atom(c.head);
    if (!c.body.empty()) {
        out << " :- ";
        for (size_t i = 0; i < c.body.size(); ++i) {
            if (i) out << ", ";
            out << format_atom(c.body[i]);
        }
    }
    out << '.';
    return out.str();
}

std::string format_program(const Program& p) {
    std::ostringstream out;
    for (const Clause& c : p.clauses) out << format_clause(c) << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Bounded enumeration
// ---------------------------------------------------------------------------

std::vector<Term> enumerate_terms(const Signature& sig, int n, int d) {
    std::vector<Term> layer;
    for (int v = 0; v < n; ++v) layer.push_back(Term::variable(v));
    for (const auto& [name, arity] : sig.functions)
        if (arity == 0) layer.push_back(Term::app(name));
    for (int depth = 1; depth <= d; ++depth) {
        std::vector<Term> next = layer;
        for (const auto& [name, arity] : sig.functions) {
            if (arity == 0) continue;
            // Odometer over argument tuples drawn from the previous layer.
            if (layer.empty()) continue;
            std::vector<size_t> idx(arity, 0);
            while (true) {
                std::vector<Term> args;
                args.reserve(arity);
                for (int i = 0; i < arity; ++i) args.push_back(layer[idx[i]]);
                Term t = Term::app(name, std::move(args));
                if (term_depth(t) == depth) next.push_back(std::move(t));
                int pos = arity - 1;
                while (pos >= 0 && ++idx[pos] == layer.size()) idx[pos--] = 0;
                if (pos < 0) break;
            }
        }
        layer = std::move(next);
    }
    return layer;
}

std::vector<Atom> enumerate_atoms(const Signature& sig, int n, int d) {
    std::vector<Term> terms = enumerate_terms(sig, n, d);
    std::vector<Atom> out;
    for (const auto& [pred, arity] : sig.predicates) {
        if (arity == 0) {
            out.push_back(Atom{pred, {}, n});
            continue;
        }
        if (terms.empty()) continue;
        std::vector<size_t> idx(arity, 0);
        while (true) {
            Atom a;
            a.pred = pred;
            a.ctx = n;
            for (int i = 0; i < arity; ++i) a.args.push_back(terms[idx[i]]);
            out.push_back(std::move(a));
            int pos = arity - 1;
            while (pos >= 0 && ++idx[pos] == terms.size()) idx[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return out;
}

}  // namespace laxlog
