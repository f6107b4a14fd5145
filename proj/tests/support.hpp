#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "laxlog/suites.hpp"

namespace laxlog::testing {

inline std::string fixture_dir() {
    if (const char* env = std::getenv("LAXLOG_FIXTURES")) return env;
#ifdef LAXLOG_SOURCE_DIR
    return std::string(LAXLOG_SOURCE_DIR) + "/fixtures";
#else
    return "fixtures";
#endif
}

inline Program load_fixture(const std::string& name) {
    std::ifstream in(fixture_dir() + "/" + name);
    if (!in) throw std::runtime_error("missing fixture: " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_program(buf.str());
}

inline Program listnat() { return load_fixture("listnat.lp"); }
inline Program listnat_plus() { return load_fixture("listnat_plus.lp"); }
inline Program gc() { return load_fixture("gc.lp"); }
inline Program bad() { return load_fixture("bad.lp"); }
inline Program ground_abcd() { return load_fixture("ground_abcd.lp"); }

inline Atom atom(const Program& p, const std::string& text) {
    return parse_atom(text, p.sig);
}

// Shorthand builders for expected values.
inline Term v(int i) { return Term::variable(i); }
inline Term c(const std::string& s) { return Term::app(s); }
inline Term f(const std::string& s, std::vector<Term> args) {
    return Term::app(s, std::move(args));
}

}  // namespace laxlog::testing
