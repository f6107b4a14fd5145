#include "laxlog/saturation.hpp"

#include <algorithm>

namespace laxlog {

const StepValue* SaturatedValue::find(const Substitution& s) const {
    for (const auto& [key, value] : table)
        if (key == s) return &value;
    return nullptr;
}

StepValue* SaturatedValue::find(const Substitution& s) {
    for (auto& [key, value] : table)
        if (key == s) return &value;
    return nullptr;
}

SaturatedValue saturate(const Program& program, const Atom& root, SatBounds bounds) {
    if (bounds.max_context < root.ctx)
        throw context_error("saturate: max context smaller than the root's context");
    SaturatedValue sat;
    sat.root = root;
    sat.bounds = bounds;
    for (int m = 0; m <= bounds.max_context; ++m) {
        for (Substitution& s :
             enumerate_substitutions(program.sig, m, root.ctx, bounds.max_depth)) {
            StepValue value = step_ext(program, apply(s, root));
            sat.table.emplace_back(std::move(s), std::move(value));
        }
    }
    return sat;
}

const StepValue& desaturate(const SaturatedValue& sat) {
    const StepValue* id = sat.find(identity_subst(sat.root.ctx));
    if (!id) throw context_error("desaturate: identity entry missing");
    return *id;
}

namespace {

int substitution_depth(const Substitution& s) {
    int d = 0;
    for (const Term& t : s.assignment) d = std::max(d, term_depth(t));
    return d;
}

bool is_injection_arrow(const Substitution& s) {
    std::vector<int> seen;
    for (const Term& t : s.assignment) {
        if (!t.is_var()) return false;
        if (std::find(seen.begin(), seen.end(), t.var) != seen.end()) return false;
        seen.push_back(t.var);
    }
    return true;
}

}  // namespace

CoherenceReport check_coherence(const SaturatedValue& sat, SatBounds gbounds,
                                const Signature& sig) {
    CoherenceReport report;
    std::vector<std::string> flagged;  // composite keys already reported

    for (const auto& [f, value] : sat.table) {
        if (f.source > gbounds.max_context || substitution_depth(f) > gbounds.max_depth)
            continue;
        for (int m2 = 0; m2 <= gbounds.max_context; ++m2) {
            for (const Substitution& g :
                 enumerate_substitutions(sig, m2, f.source, gbounds.max_depth)) {
                Substitution composite = compose(g, f);
                const StepValue* target = sat.find(composite);
                if (!target) continue;  // composite falls outside the table
                report.pairs_checked++;

                StepValue image = map_step_value(g, value);
                bool strict = is_injection_arrow(g);
                bool ok = strict ? step_equal(image, *target, g.source)
                                 : step_leq(image, *target, g.source);
                if (ok) continue;

                std::string key = composite.key_string();
                if (std::find(flagged.begin(), flagged.end(), key) != flagged.end()) continue;
                flagged.push_back(key);
                CoherenceReport::Violation v;
                v.f = f.key_string();
                v.g = g.key_string();
                v.entry = key;
                v.detail = strict ? "injection image differs from the composite entry"
                                  : "image not dominated by the composite entry";
                report.violations.push_back(std::move(v));
            }
        }
    }
    return report;
}

}  // namespace laxlog
