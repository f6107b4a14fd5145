#include "laxlog/suites.hpp"

#include <algorithm>

namespace laxlog {

SuiteReport check_lax_suite(const Program& program, int max_context, int term_depth, int k) {
    SuiteReport report;
    for (int m = 0; m <= max_context; ++m) {
        std::vector<Atom> atoms = enumerate_atoms(program.sig, m, term_depth);
        for (int n = 0; n <= max_context; ++n) {
            for (const Substitution& sub :
                 enumerate_substitutions(program.sig, n, m, term_depth)) {
                for (const Atom& atom : atoms) {
                    report.checked++;
                    Witness w = check_lax(program, sub, atom, k);
                    if (!w.holds) report.violations.push_back(w.detail);
                }
            }
        }
    }
    return report;
}

SuiteReport check_inj_suite(const Program& program, int max_target, int atom_depth, int k) {
    SuiteReport report;
    for (int n = 0; n <= max_target; ++n) {
        std::vector<Atom> atoms = enumerate_atoms(program.sig, n, atom_depth);
        for (int m = n; m <= max_target; ++m) {
            for (const Injection& inj : enumerate_injections(n, m)) {
                for (const Atom& atom : atoms) {
                    report.checked++;
                    Witness w = check_inj_strict(program, inj, atom, k);
                    if (!w.holds) report.violations.push_back(w.detail);
                }
            }
        }
    }
    return report;
}

SuiteReport check_dist_suite(const Program& program, int sample_count, uint64_t seed) {
    SuiteReport report;

    // step_ext factors through raw_step followed by the distributive law.
    for (int n = 0; n <= 2; ++n) {
        for (const Atom& atom : enumerate_atoms(program.sig, n, 1)) {
            report.checked++;
            ExtAtom e = embed(atom);
            auto through_law = dist_law(raw_step(program, e), n);
            StepValue direct = step_ext(program, e);
            std::vector<std::vector<ExtAtom>> direct_classes;
            for (const Body& b : direct) {
                std::vector<ExtAtom> c = b.classes(n);
                if (std::find(direct_classes.begin(), direct_classes.end(), c) ==
                    direct_classes.end())
                    direct_classes.push_back(std::move(c));
            }
            std::sort(direct_classes.begin(), direct_classes.end(),
                      [](const auto& a, const auto& b) {
                          return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                              b.end(), ext_atom_less);
                      });
            if (through_law != direct_classes)
                report.violations.push_back("factorization differs at " + format_atom(atom));
        }
    }

    // Naturality along injections: reindexing before or after the law agrees.
    Rng rng(seed);
    for (int i = 0; i < sample_count; ++i) {
        report.checked++;
        int n = rng.below(3);
        int k = rng.below(3);
        int sets = 1 + rng.below(2);
        RawStep raw;
        raw.exist_count = k;
        bool skip = false;
        for (int s = 0; s < sets && !skip; ++s) {
            std::vector<Atom> atoms;
            int len = 1 + rng.below(2);
            for (int a = 0; a < len; ++a) {
                try {
                    atoms.push_back(random_atom(rng, program.sig, n + k, 1));
                } catch (const context_error&) {
                    skip = true;
                    break;
                }
            }
            raw.sets.push_back(std::move(atoms));
        }
        if (skip) continue;

        int m = n + rng.below(3);
        Injection inj = random_injection(rng, n, m);
        Substitution arrow = injection_subst(inj);  // m -> n

        // Reindex the raw element along the arrow, existentials riding along.
        RawStep moved;
        moved.exist_count = k;
        Substitution padded = pad(arrow, k);
        for (const auto& set : raw.sets) {
            std::vector<Atom> atoms;
            for (const Atom& a : set) atoms.push_back(apply(padded, a));
            moved.sets.push_back(std::move(atoms));
        }
        auto law_after = dist_law(moved, m);

        auto law_before = dist_law(raw, n);
        std::vector<std::vector<ExtAtom>> mapped;
        for (const auto& set : law_before) {
            std::vector<ExtAtom> inner;
            for (const ExtAtom& e : set) {
                ExtAtom me = int_map(arrow, e);
                if (std::find(inner.begin(), inner.end(), me) == inner.end())
                    inner.push_back(std::move(me));
            }
            std::sort(inner.begin(), inner.end(), ext_atom_less);
            if (std::find(mapped.begin(), mapped.end(), inner) == mapped.end())
                mapped.push_back(std::move(inner));
        }
        std::sort(mapped.begin(), mapped.end(), [](const auto& a, const auto& b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                                ext_atom_less);
        });
        if (law_after != mapped)
            report.violations.push_back("naturality differs on sample " + std::to_string(i));
    }
    return report;
}

SuiteReport check_oracle_suite(const Program& program, int max_context, int atom_depth,
                               int max_level) {
    SuiteReport report;
    bool plain_ok = !classify(program).existential;
    for (int n = 0; n <= max_context; ++n) {
        for (const Atom& atom : enumerate_atoms(program.sig, n, atom_depth)) {
            for (int k = 0; k <= max_level; ++k) {
                report.checked++;
                CoTree tree = build_cotree(program, atom, k);
                Approximant from_tree = tree_to_approximant(tree, k);
                Approximant iterated = approximant(program, atom, k, Mode::Ext);
                if (!(from_tree == iterated)) {
                    report.violations.push_back("routes disagree at " + format_atom(atom) +
                                                " level " + std::to_string(k));
                    continue;
                }
                if (plain_ok) {
                    Approximant plain = approximant(program, atom, k, Mode::Plain);
                    if (!(plain == iterated))
                        report.violations.push_back("plain and extended modes disagree at " +
                                                    format_atom(atom) + " level " +
                                                    std::to_string(k));
                }
            }
        }
    }
    return report;
}

SuiteReport check_bridge_suite(const Program& program, int max_context, int atom_depth,
                               int fuel) {
    SuiteReport report;
    for (int n = 0; n <= max_context; ++n) {
        for (const Atom& atom : enumerate_atoms(program.sig, n, atom_depth)) {
            report.checked++;
            BridgeReport b = verify_bridge(program, atom, fuel);
            if (!b.ok())
                for (const auto& e : b.checked)
                    if (!e.proved)
                        report.violations.push_back("answer " + e.answer + " at " +
                                                    format_atom(atom) +
                                                    " has no matching proof of " + e.instance);
        }
    }
    return report;
}

}  // namespace laxlog
