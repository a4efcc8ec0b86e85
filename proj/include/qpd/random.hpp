#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>

#include "qpd/ncalgebra.hpp"

namespace qpd {

/// Deterministic source for randomized property checks. Seed comes from
/// QPD_SEED when set, so failures are reproducible.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    static std::uint64_t seed_from_env(std::uint64_t fallback = 0xC0FFEEu) {
        if (const char* s = std::getenv("QPD_SEED")) return std::strtoull(s, nullptr, 10);
        return fallback;
    }

    int uniform(int lo, int hi) { // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

    /// Gaussian-rational coefficient of height <= 10, nonzero.
    HbarScalar coefficient() {
        GaussRational g;
        do {
            g = GaussRational(mpq_class(uniform(-10, 10)), mpq_class(uniform(-10, 10)));
        } while (g.is_zero());
        return HbarScalar(g);
    }

    /// Random element of the preset: up to `terms` monomials of total degree <= deg.
    NCPoly poly(const Preset& p, int deg, int terms, bool allow_rho = false) {
        NCPoly r(p);
        for (int t = 0; t < terms; ++t) {
            Word w;
            int len = uniform(0, deg);
            for (int q = 0; q < len; ++q) w.letters.push_back(uniform(0, p.num_gens() - 1));
            if (allow_rho && p.has_rho()) w.rho = uniform(0, 1);
            r = r + NCPoly::from_words(p, {{coefficient(), w}});
        }
        return r;
    }

    /// Raw unsorted word, for confluence checks.
    Word word(const Preset& p, int len, bool allow_rho = false) {
        Word w;
        for (int q = 0; q < len; ++q) w.letters.push_back(uniform(0, p.num_gens() - 1));
        if (allow_rho && p.has_rho()) w.rho = uniform(-1, 1);
        return w;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace qpd
