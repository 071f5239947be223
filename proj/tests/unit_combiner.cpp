#include "doctest.h"

#include <array>
#include <optional>
#include <vector>

#include "hilbert10/combiner.hpp"
#include "support.hpp"

using namespace h10;
namespace ht = h10::testing;

namespace {

std::vector<BigInt> as_point(const M3Instance& t) {
    return {t.A1, t.A2, t.A3, t.S, t.T, t.R, t.n};
}

// Root scan over a window, straight off the defining product via m3_eval.
std::optional<BigInt> scan_roots(const M3Instance& base, long window) {
    for (long n = 0; n <= window; ++n) {
        M3Instance t = base;
        t.n = n;
        if (m3_eval(t) == 0) return BigInt(n);
    }
    return std::nullopt;
}

}  // namespace

TEST_SUITE("combiner") {

TEST_CASE("formal square-root algebra squares to its relations") {
    // (sqrt A1)^2 = A1, mixed products land in the XOR component
    SqrtAlgebraElement<BigInt> r1{};
    r1.coords[1] = 1;
    const std::array<BigInt, 3> rel{5, 7, 11};
    const auto sq = sqrt_mul(r1, r1, rel);
    for (unsigned e = 0; e < 8; ++e) CHECK(sq.coords[e] == (e == 0 ? 5 : 0));

    SqrtAlgebraElement<BigInt> mixed{};
    mixed.coords[1] = 2;   // 2 sqrt(A1)
    mixed.coords[6] = 3;   // 3 sqrt(A2) sqrt(A3)
    const auto prod = sqrt_mul(mixed, mixed, rel);
    CHECK(prod.coords[0] == 4 * 5 + 9 * 7 * 11);
    CHECK(prod.coords[7] == 2 * 2 * 3);
}

TEST_CASE("collapsed instances have closed forms") {
    // With A = (0,0,0), S = 1, T = 0 every factor is n - (2R - 1); the
    // whole product is (n - (2R-1))^8.
    auto collapsed = [](long R, long n) {
        BigInt f = BigInt(n) - (2 * R - 1);
        BigInt v = 1;
        for (int i = 0; i < 8; ++i) v *= f;
        return v;
    };
    for (long R = -2; R <= 3; ++R)
        for (long n = -3; n <= 3; ++n)
            CHECK(m3_eval({0, 0, 0, 1, 0, R, n}) == collapsed(R, n));

    CHECK(m3_eval({0, 0, 0, 1, 0, 1, 1}) == 0);
    CHECK(m3_eval({0, 0, 0, 1, 0, 0, 0}) == 1);
}

TEST_CASE("expansion is a polynomial of the documented shape") {
    const SparsePoly& M = m3_expand();  // throws if any root coordinate survives
    CHECK(M.total_degree() == 72);
    CHECK(M.max_vars() == m3_var::n);

    // the n^8 slice is exactly S^16
    std::size_t n8_terms = 0;
    for (const auto& [m, c] : M.terms()) {
        if (m.exponent(m3_var::n) != 8) continue;
        ++n8_terms;
        CHECK(m == Monomial::from_pairs({{m3_var::S, 16}, {m3_var::n, 8}}));
        CHECK(c == 1);
    }
    CHECK(n8_terms == 1);
}

TEST_CASE("expansion and direct evaluation agree") {
    const SparsePoly& M = m3_expand();
    auto g = ht::make_rng(0xf1);
    for (int i = 0; i < 150; ++i) {
        const M3Instance t{ht::rnd(g, -6, 6), ht::rnd(g, -6, 6), ht::rnd(g, -6, 6),
                           ht::rnd(g, -4, 4), ht::rnd(g, -5, 5), ht::rnd(g, -3, 3),
                           ht::rnd(g, -9, 9)};
        CHECK(m3_eval(t) == M.insertion(as_point(t)));
    }
}

TEST_CASE("factored DAG form") {
    std::array<Expr, 3> A{Expr::variable(m3_var::A1), Expr::variable(m3_var::A2),
                          Expr::variable(m3_var::A3)};
    const Expr dag = m3_dag(A, Expr::variable(m3_var::S), Expr::variable(m3_var::T),
                            Expr::variable(m3_var::R), Expr::variable(m3_var::n));

    CHECK(dag.degree_bound() == 72);  // attained by the expansion

    const auto vb = dag.var_bound();
    for (VarIndex v : vb) CHECK(v <= m3_var::n);

    auto g = ht::make_rng(0xf2);
    for (int i = 0; i < 25; ++i) {
        const M3Instance t{ht::rnd(g, -5, 5), ht::rnd(g, -5, 5), ht::rnd(g, -5, 5),
                           ht::rnd(g, -4, 4), ht::rnd(g, -5, 5), ht::rnd(g, -3, 3),
                           ht::rnd(g, -8, 8)};
        CHECK(dag.eval(as_point(t)) == m3_eval(t));
    }
}

TEST_CASE("relation side") {
    CHECK(relations_hold(0, 1, 4, 2, 6, 3));
    CHECK_FALSE(relations_hold(2, 0, 0, 1, 0, 1));
    CHECK(relations_hold(0, 0, 0, 5, 0, 1));
    CHECK_FALSE(relations_hold(0, 0, 0, 2, 3, 1));   // 2 does not divide 3
    CHECK_FALSE(relations_hold(0, 0, 0, 1, 0, 0));   // R must be positive
    CHECK_THROWS_AS(relations_hold(0, 0, 0, 0, 0, 1), std::domain_error);
}

TEST_CASE("root decision") {
    auto root = [](long a1, long a2, long a3, long s, long t, long r) {
        return m3_exists_nonneg_root(a1, a2, a3, s, t, r);
    };

    SUBCASE("pinned decisions") {
        auto r1 = root(0, 0, 0, 1, 0, 1);
        REQUIRE(r1.has_value());
        CHECK(*r1 == 1);

        CHECK_FALSE(root(0, 0, 0, 1, 0, 0).has_value());

        auto r3 = root(1, 1, 1, 1, 2, 1);
        REQUIRE(r3.has_value());
        CHECK(m3_eval({1, 1, 1, 1, 2, 1, *r3}) == 0);
        CHECK(relations_hold(1, 1, 1, 1, 2, 1));

        CHECK_THROWS_AS(root(1, 1, 1, 0, 2, 1), std::domain_error);
    }

    SUBCASE("returned root is the smallest, cross-checked by scanning") {
        auto g = ht::make_rng(0xf3);
        const long window = 120;
        for (int i = 0; i < 60; ++i) {
            const M3Instance base{ht::rnd(g, 0, 2) * ht::rnd(g, 0, 2),  // small squares + nonsquares
                                  ht::rnd(g, 0, 4), ht::rnd(g, 0, 4),
                                  ht::rnd(g, 1, 2) * (ht::rnd(g, 0, 1) * 2 - 1),
                                  ht::rnd(g, -3, 3), ht::rnd(g, -1, 2), 0};
            const auto scanned = scan_roots(base, window);
            const auto decided =
                m3_exists_nonneg_root(base.A1, base.A2, base.A3, base.S, base.T, base.R);
            if (decided.has_value() && *decided <= window) {
                REQUIRE(scanned.has_value());
                CHECK(*scanned == *decided);
            } else {
                CHECK_FALSE(scanned.has_value());
            }
        }
    }

    SUBCASE("equivalence with the relation side on a grid sample") {
        auto g = ht::make_rng(0xf4);
        for (int i = 0; i < 400; ++i) {
            const BigInt A1 = ht::rnd(g, 0, 9), A2 = ht::rnd(g, 0, 9), A3 = ht::rnd(g, 0, 9);
            BigInt S = ht::rnd(g, 1, 4);
            if (ht::rnd(g, 0, 1)) S = -S;
            const BigInt T = ht::rnd(g, -8, 8), R = ht::rnd(g, -3, 5);
            CHECK(relations_hold(A1, A2, A3, S, T, R) ==
                  m3_exists_nonneg_root(A1, A2, A3, S, T, R).has_value());
        }
    }
}

}  // TEST_SUITE
