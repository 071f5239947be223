#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "hilbert10/bigint.hpp"

namespace h10 {

using VarIndex = std::uint32_t;

/*
 * Monomial: finite map from variable index to positive exponent, stored
 * as a vector of (var, exp) pairs sorted by variable index.  The empty
 * monomial is the unit (the constant-term key).
 */
class Monomial {
  public:
    using Pair = std::pair<VarIndex, std::uint32_t>;

    Monomial() = default;

    static Monomial variable(VarIndex v, std::uint32_t e = 1);
    // Accepts unsorted input with duplicates; zero exponents are dropped.
    static Monomial from_pairs(std::vector<Pair> pairs);

    const std::vector<Pair>& pairs() const { return exps_; }
    bool is_unit() const { return exps_.empty(); }
    std::uint32_t exponent(VarIndex v) const;
    unsigned long total_degree() const;
    VarIndex max_var() const;  // 0 when no variables occur

    Monomial operator*(const Monomial& o) const;
    bool operator==(const Monomial& o) const = default;

    // Graded lexicographic: total degree first, ties by exponent of the
    // lowest variable index.
    static int grlex_cmp(const Monomial& a, const Monomial& b);

  private:
    std::vector<Pair> exps_;
};

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::grlex_cmp(a, b) > 0;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (const auto& [v, e] : m.pairs()) {
            h ^= (std::size_t(v) << 32) | e;
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};

/*
 * Sparse multivariate polynomial over BigInt with eagerly canonical
 * representation: no zero coefficients, terms ordered graded-lex
 * descending.  Equality is structural.
 */
class SparsePoly {
  public:
    using TermMap = std::map<Monomial, BigInt, GrlexGreater>;

    SparsePoly() = default;

    static SparsePoly constant(BigInt c);
    static SparsePoly variable(VarIndex v);
    static SparsePoly monomial(Monomial m, BigInt c);
    // Accumulates duplicates, drops zeros.
    static SparsePoly from_terms(std::vector<std::pair<Monomial, BigInt>> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    BigInt coeff(const Monomial& m) const;

    // 0 for the zero polynomial.
    unsigned long total_degree() const;
    // Indices occurring in some stored monomial.
    std::set<VarIndex> vars() const;
    // Largest variable index occurring, 0 when none do.
    VarIndex max_vars() const;

    SparsePoly operator-() const;
    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const SparsePoly& o);

    SparsePoly pow(unsigned long e) const;

    // Multiplication that gives up once the accumulated distinct-term
    // count passes the budget.
    static std::optional<SparsePoly> mul_bounded(const SparsePoly& a, const SparsePoly& b,
                                                 std::size_t term_budget);

    // Evaluation homomorphism; variables beyond the span are 0.
    BigInt insertion(std::span<const BigInt> z) const;

    // Terms as dense multi-indices of length max_vars()+1, in term order.
    std::vector<std::pair<std::vector<std::uint32_t>, BigInt>> expand_terms() const;

    bool operator==(const SparsePoly& o) const = default;

  private:
    TermMap terms_;  // canonical: no zero coefficients

    friend SparsePoly poly_mul_impl(const SparsePoly&, const SparsePoly&,
                                    const std::size_t*, bool*);
};

}  // namespace h10
