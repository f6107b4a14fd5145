// Command-line front end for the resolution kernel: parsing, the two
// resolution procedures, derivation trees, approximants, saturation, and the
// property-check suites, over program files in the .lp syntax.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "laxlog/suites.hpp"

using nlohmann::json;
using namespace laxlog;

namespace {

std::string read_program_file(const std::string& path) {
    namespace fs = std::filesystem;
    fs::path candidate = path;
    if (!fs::exists(candidate)) {
        if (const char* dir = std::getenv("LAXLOG_FIXTURES")) {
            fs::path alt = fs::path(dir) / path;
            if (fs::exists(alt)) candidate = alt;
        }
    }
    std::ifstream in(candidate);
    if (!in) throw std::runtime_error("cannot open program file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Program load_program(const std::string& path) {
    return parse_program(read_program_file(path));
}

// Answers print with the query's own variable spellings; variables the
// derivation introduced keep their canonical names.
std::string var_name(int index, const std::vector<std::string>& names) {
    if (index < static_cast<int>(names.size())) return names[index];
    return "x" + std::to_string(index + 1);
}

void print_term_named(std::ostringstream& out, const Term& t,
                      const std::vector<std::string>& names) {
    if (t.is_var()) {
        out << var_name(t.var, names);
        return;
    }
    out << t.sym;
    if (!t.args.empty()) {
        out << '(';
        for (size_t i = 0; i < t.args.size(); ++i) {
            if (i) out << ',';
            print_term_named(out, t.args[i], names);
        }
        out << ')';
    }
}

std::string named_answer(const Substitution& s, const std::vector<std::string>& names) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int i = 0; i < s.target; ++i) {
        if (s.assignment[i].is_var() && s.assignment[i].var == i) continue;
        if (!first) out << ", ";
        first = false;
        out << var_name(i, names) << "->";
        print_term_named(out, s.assignment[i], names);
    }
    out << '}';
    return out.str();
}

void print_proof(const ProofNode& node, int indent) {
    std::cout << std::string(indent * 2, ' ') << format_atom(node.goal) << "   [clause "
              << (node.clause_index + 1) << ' ' << node.matcher.to_string() << "]\n";
    for (const ProofNode& c : node.children) print_proof(c, indent + 1);
}

json step_value_json(const StepValue& v, int bound) {
    json sets = json::array();
    for (const Body& b : v) {
        json atoms = json::array();
        for (const Atom& a : b.atoms) atoms.push_back(format_atom(a, bound));
        sets.push_back({{"existentials", b.exist_count}, {"atoms", atoms}});
    }
    return sets;
}

json approximant_json(const Approximant& a) {
    json out;
    out["level"] = a.level;
    out["atom"] = a.atom.to_string();
    if (a.level > 0) {
        json sets = json::array();
        for (const auto& inner : a.sets) {
            json set = json::array();
            for (const Approximant& c : inner) set.push_back(approximant_json(c));
            sets.push_back(set);
        }
        out["sets"] = sets;
    }
    return out;
}

json suite_json(const std::string& name, const SuiteReport& report) {
    json out;
    out["check"] = name;
    out["checked"] = report.checked;
    out["violations"] = report.violations;
    out["holds"] = report.ok();
    return out;
}

int finish_suite(const std::string& name, const SuiteReport& report, bool as_json) {
    if (as_json) {
        std::cout << suite_json(name, report).dump(2) << '\n';
    } else {
        std::cout << name << ": " << report.checked << " checked, " << report.violations.size()
                  << " violations\n";
        for (const auto& v : report.violations) std::cout << "  " << v << '\n';
    }
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"resolution kernel with coinductive derivation trees"};
    app.require_subcommand(1);

    std::string path, goal_text, format = "ascii", mode = "auto";
    int fuel = 8, depth = 4, level = 3, max_answers = 10;
    int max_context = 2, term_depth = 1, sat_context = -1, sat_depth = 2;
    int samples = 1000;
    uint64_t seed = 42;

    auto* cmd_parse = app.add_subcommand("parse", "parse a program and print it back");
    cmd_parse->add_option("program", path)->required();
    cmd_parse->add_option("--format", format)->check(CLI::IsMember({"ascii", "json"}));

    auto* cmd_classify = app.add_subcommand("classify", "report existential clauses");
    cmd_classify->add_option("program", path)->required();
    cmd_classify->add_option("--format", format)->check(CLI::IsMember({"ascii", "json"}));

    auto* cmd_prove = app.add_subcommand("prove", "term-matching proof search");
    cmd_prove->add_option("program", path)->required();
    cmd_prove->add_option("goal", goal_text)->required();
    cmd_prove->add_option("--fuel", fuel, "depth bound");

    auto* cmd_solve = app.add_subcommand("solve", "SLD answer enumeration");
    cmd_solve->add_option("program", path)->required();
    cmd_solve->add_option("goal", goal_text)->required();
    cmd_solve->add_option("--fuel", fuel, "step bound");
    cmd_solve->add_option("--max-answers", max_answers);

    auto* cmd_tree = app.add_subcommand("tree", "depth-bounded derivation tree");
    cmd_tree->add_option("program", path)->required();
    cmd_tree->add_option("goal", goal_text)->required();
    cmd_tree->add_option("--depth", depth);
    cmd_tree->add_option("--format", format)->check(CLI::IsMember({"ascii", "dot", "json"}));

    auto* cmd_approx = app.add_subcommand("approx", "level-k approximant");
    cmd_approx->add_option("program", path)->required();
    cmd_approx->add_option("goal", goal_text)->required();
    cmd_approx->add_option("--level", level);
    cmd_approx->add_option("--mode", mode)->check(CLI::IsMember({"auto", "plain", "ext"}));
    cmd_approx->add_option("--format", format)->check(CLI::IsMember({"ascii", "json"}));

    auto* cmd_saturate = app.add_subcommand("saturate", "bounded saturated value");
    cmd_saturate->add_option("program", path)->required();
    cmd_saturate->add_option("goal", goal_text)->required();
    cmd_saturate->add_option("--max-context", sat_context, "default: goal context + 2");
    cmd_saturate->add_option("--max-depth", sat_depth);

    auto* cmd_check = app.add_subcommand("check", "property suites");
    std::string which;
    cmd_check->add_option("suite", which)
        ->required()
        ->check(CLI::IsMember({"lax", "inj", "saturation", "monad", "dist", "bridge"}));
    cmd_check->add_option("program", path)->required();
    cmd_check->add_option("goal", goal_text, "root atom (saturation suite)");
    cmd_check->add_option("--max-context", max_context);
    cmd_check->add_option("--term-depth", term_depth);
    cmd_check->add_option("--level", level);
    cmd_check->add_option("--fuel", fuel);
    cmd_check->add_option("--samples", samples);
    cmd_check->add_option("--seed", seed);
    cmd_check->add_option("--format", format)->check(CLI::IsMember({"ascii", "json"}));
    int inj_target = 4;
    cmd_check->add_option("--max-target", inj_target, "largest injection target (inj suite)");

    auto* cmd_oracle = app.add_subcommand("oracle", "approximant vs tree equivalence");
    cmd_oracle->add_option("program", path)->required();
    cmd_oracle->add_option("--level", level);
    cmd_oracle->add_option("--max-context", max_context);
    cmd_oracle->add_option("--term-depth", term_depth);
    cmd_oracle->add_option("--format", format)->check(CLI::IsMember({"ascii", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_parse) {
            Program p = load_program(path);
            if (format == "json") {
                json out;
                out["functions"] = p.sig.functions;
                out["predicates"] = p.sig.predicates;
                json clauses = json::array();
                for (const Clause& c : p.clauses) clauses.push_back(format_clause(c));
                out["clauses"] = clauses;
                std::cout << out.dump(2) << '\n';
            } else {
                std::cout << format_program(p);
            }
            return 0;
        }

        if (*cmd_classify) {
            Program p = load_program(path);
            Classification c = classify(p);
            if (format == "json") {
                json out;
                out["existential"] = c.existential;
                json w = json::array();
                for (size_t i : c.witnesses) w.push_back(i + 1);
                out["witnesses"] = w;
                std::cout << out.dump(2) << '\n';
            } else if (c.existential) {
                std::cout << "Existential(";
                for (size_t i = 0; i < c.witnesses.size(); ++i)
                    std::cout << (i ? ", " : "") << "clause " << (c.witnesses[i] + 1);
                std::cout << ")\n";
            } else {
                std::cout << "NonExistential\n";
            }
            return 0;
        }

        if (*cmd_prove) {
            Program p = load_program(path);
            Atom goal = parse_atom(goal_text, p.sig);
            TmResult r = tm_prove(p, goal, fuel);
            std::cout << to_string(r.outcome) << '\n';
            if (r.proof) print_proof(*r.proof, 1);
            return r.outcome == TmOutcome::Proved ? 0 : 1;
        }

        if (*cmd_solve) {
            Program p = load_program(path);
            std::vector<std::string> names;
            Atom goal = parse_atom(goal_text, p.sig, &names);
            auto answers = sld_solve(p, {goal}, fuel, static_cast<size_t>(max_answers));
            for (const SldAnswer& a : answers)
                std::cout << named_answer(a.answer, names) << "   (" << a.steps << " steps)\n";
            if (answers.empty()) std::cout << "no answers\n";
            return answers.empty() ? 1 : 0;
        }

        if (*cmd_tree) {
            Program p = load_program(path);
            Atom goal = parse_atom(goal_text, p.sig);
            CoTree t = build_cotree(p, goal, depth);
            TreeFormat f = format == "dot"    ? TreeFormat::Dot
                           : format == "json" ? TreeFormat::Json
                                              : TreeFormat::Ascii;
            std::cout << export_tree(t, f);
            return 0;
        }

        if (*cmd_approx) {
            Program p = load_program(path);
            Atom goal = parse_atom(goal_text, p.sig);
            Mode m = mode == "plain" ? Mode::Plain
                     : mode == "ext" ? Mode::Ext
                                     : (classify(p).existential ? Mode::Ext : Mode::Plain);
            Approximant a = approximant(p, goal, level, m);
            if (format == "json")
                std::cout << approximant_json(a).dump(2) << '\n';
            else
                std::cout << to_string(a) << '\n';
            return 0;
        }

        if (*cmd_saturate) {
            Program p = load_program(path);
            Atom goal = parse_atom(goal_text, p.sig);
            SatBounds bounds;
            bounds.max_context = sat_context < 0 ? goal.ctx + 2 : sat_context;
            bounds.max_depth = sat_depth;
            SaturatedValue sat = saturate(p, goal, bounds);
            json table = json::object();
            for (const auto& [sub, value] : sat.table)
                table[sub.key_string()] = step_value_json(value, sub.source);
            json out;
            out["root"] = format_atom(goal);
            out["max_context"] = bounds.max_context;
            out["max_depth"] = bounds.max_depth;
            out["table"] = table;
            std::cout << out.dump(2) << '\n';
            return 0;
        }

        if (*cmd_check) {
            Program p = load_program(path);
            bool as_json = format == "json";
            if (which == "lax")
                return finish_suite("lax", check_lax_suite(p, max_context, term_depth, level),
                                    as_json);
            if (which == "inj")
                return finish_suite("inj", check_inj_suite(p, inj_target, term_depth, level),
                                    as_json);
            if (which == "monad") {
                LawReport r = check_monad_laws(p.sig, samples, seed);
                SuiteReport s;
                s.checked = static_cast<size_t>(r.samples);
                s.violations = r.violations;
                return finish_suite("monad", s, as_json);
            }
            if (which == "dist")
                return finish_suite("dist", check_dist_suite(p, samples, seed), as_json);
            if (which == "bridge") {
                if (!goal_text.empty()) {
                    BridgeReport b = verify_bridge(p, parse_atom(goal_text, p.sig), fuel);
                    SuiteReport s;
                    s.checked = b.checked.size();
                    for (const auto& e : b.checked)
                        if (!e.proved)
                            s.violations.push_back("answer " + e.answer + " unproved at " +
                                                   e.instance);
                    return finish_suite("bridge", s, as_json);
                }
                return finish_suite("bridge",
                                    check_bridge_suite(p, max_context, term_depth, fuel),
                                    as_json);
            }
            // saturation
            if (goal_text.empty())
                throw std::runtime_error("check saturation needs a root atom");
            Atom root = parse_atom(goal_text, p.sig);
            SatBounds bounds{root.ctx + 2, 2};
            SaturatedValue sat = saturate(p, root, bounds);
            if (!step_equal(desaturate(sat), step_ext(p, root), root.ctx))
                throw std::runtime_error("desaturation law failed");
            CoherenceReport r = check_coherence(sat, SatBounds{2, 1}, p.sig);
            SuiteReport s;
            s.checked = r.pairs_checked;
            for (const auto& v : r.violations)
                s.violations.push_back("entry " + v.entry + " via f=" + v.f + ", g=" + v.g +
                                       ": " + v.detail);
            return finish_suite("saturation", s, as_json);
        }

        if (*cmd_oracle) {
            Program p = load_program(path);
            return finish_suite("oracle",
                                check_oracle_suite(p, max_context, term_depth, level),
                                format == "json");
        }
    } catch (const parse_error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
