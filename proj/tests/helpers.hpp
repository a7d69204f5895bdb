// Shared helpers for the test suites: a deterministic RNG and small random
// value generators for property tests.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "talex/laurent.hpp"
#include "talex/word.hpp"

namespace talex::testing {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }
    /// Uniform in [lo, hi] inclusive.
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

  private:
    std::uint64_t state_;
};

inline LaurentPoly random_poly(Rng& rng, VarSet vars, int max_terms, int max_abs_exp, int max_abs_coeff,
                               bool laurent = true) {
    std::vector<LaurentPoly::Term> terms;
    int count = static_cast<int>(rng.range(0, max_terms));
    for (int i = 0; i < count; ++i) {
        Monomial m;
        for (int v = 0; v < kNumVars; ++v)
            if (vars.contains(v))
                m.exp[static_cast<std::size_t>(v)] =
                    static_cast<std::int32_t>(rng.range(laurent ? -max_abs_exp : 0, max_abs_exp));
        long c = rng.range(-max_abs_coeff, max_abs_coeff);
        terms.push_back(LaurentPoly::Term{m, mpz_class(c)});
    }
    return LaurentPoly::from_terms(vars, std::move(terms));
}

inline LaurentPoly random_nonzero_poly(Rng& rng, VarSet vars, int max_terms, int max_abs_exp, int max_abs_coeff,
                                       bool laurent = true) {
    while (true) {
        LaurentPoly p = random_poly(rng, vars, max_terms, max_abs_exp, max_abs_coeff, laurent);
        if (!p.is_zero()) return p;
    }
}

inline Word random_word(Rng& rng, int generators, int max_length) {
    std::vector<Letter> letters;
    int len = static_cast<int>(rng.range(0, max_length));
    for (int i = 0; i < len; ++i)
        letters.push_back(Letter{static_cast<std::int32_t>(rng.range(0, generators - 1)),
                                 rng.range(0, 1) == 0 ? 1 : -1});
    return Word::from_letters(letters);
}

inline std::string fixture_path(const std::string& name) { return std::string(TALEX_FIXTURE_DIR) + "/" + name; }

}  // namespace talex::testing
