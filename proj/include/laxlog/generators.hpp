#pragma once

#include <cstdint>
#include <random>

#include "laxlog/lawvere.hpp"

namespace laxlog {

// Seeded random values for property checks. All randomness in the library
// flows through an explicit Rng so runs are reproducible bit for bit.
class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    int below(int n) {
        return n <= 1 ? 0 : static_cast<int>(engine_() % static_cast<uint64_t>(n));
    }
    bool chance(int percent) { return below(100) < percent; }

  private:
    std::mt19937_64 engine_;
};

// A term over x1..xn of depth <= max_depth. With no variables and no
// constants in the signature this cannot exist; throws context_error then.
Term random_term(Rng& rng, const Signature& sig, int ctx, int max_depth);

Atom random_atom(Rng& rng, const Signature& sig, int ctx, int max_depth);

// An atom whose context is exactly spanned by its variables (ctx = 1 + max
// used index, or 0). Convenient for parser round-trips.
Atom tighten(const Atom& a);

Substitution random_substitution(Rng& rng, const Signature& sig, int n, int m, int d);

Injection random_injection(Rng& rng, int n, int m);

// A small random program. With `existentials` false every body variable also
// occurs in its clause's head.
Program random_program(Rng& rng, bool existentials);

}  // namespace laxlog
