#pragma once

#include <cstdlib>
#include <random>
#include <vector>

#include "hilbert10/poly.hpp"

namespace h10::testing {

inline std::uint64_t test_seed() {
    if (const char* env = std::getenv("HILBERT10_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env) return v;
    }
    return 0x48696c6265727431ull;
}

// Salted per test file so suites draw independent streams.
inline std::mt19937_64 make_rng(std::uint64_t salt) { return std::mt19937_64(test_seed() ^ salt); }

inline long rnd(std::mt19937_64& g, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(g);
}

inline SparsePoly random_poly(std::mt19937_64& g, unsigned vars, unsigned max_terms,
                              unsigned max_exp, long coeff_mag) {
    std::vector<std::pair<Monomial, BigInt>> terms;
    const long n_terms = rnd(g, 0, static_cast<long>(max_terms));
    for (long t = 0; t < n_terms; ++t) {
        std::vector<Monomial::Pair> ps;
        for (VarIndex v = 0; v < vars; ++v) {
            const long e = rnd(g, 0, static_cast<long>(max_exp));
            if (e > 0) ps.emplace_back(v, static_cast<std::uint32_t>(e));
        }
        const long c = rnd(g, -coeff_mag, coeff_mag);
        if (c != 0) terms.emplace_back(Monomial::from_pairs(std::move(ps)), BigInt(c));
    }
    return SparsePoly::from_terms(std::move(terms));
}

inline std::vector<BigInt> random_point(std::mt19937_64& g, std::size_t n, long mag) {
    std::vector<BigInt> z;
    z.reserve(n);
    for (std::size_t i = 0; i < n; ++i) z.emplace_back(rnd(g, -mag, mag));
    return z;
}

}  // namespace h10::testing
