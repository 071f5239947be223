#include "doctest.h"

#include <algorithm>
#include <set>

#include "hilbert10/poly.hpp"
#include "support.hpp"

using namespace h10;
namespace ht = h10::testing;

namespace {

SparsePoly X(VarIndex v) { return SparsePoly::variable(v); }
SparsePoly C(long c) { return SparsePoly::constant(c); }

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("constructors produce canonical forms") {
    CHECK(C(0).is_zero());
    CHECK(C(0).term_count() == 0);

    const SparsePoly v3 = X(3);
    CHECK(v3.term_count() == 1);
    CHECK(v3.coeff(Monomial::variable(3)) == 1);

    const SparsePoly c = C(-7);
    CHECK(c.term_count() == 1);
    CHECK(c.coeff(Monomial{}) == -7);
    CHECK(c.total_degree() == 0);
}

TEST_CASE("hand-checked products") {
    CHECK((X(0) + C(1)) * (X(0) - C(1)) == X(0) * X(0) - C(1));
    CHECK((X(1) + C(1)).pow(2) == X(1) * X(1) + C(2) * X(1) + C(1));
    CHECK(((X(0) + X(1)) * C(0)).is_zero());
    CHECK(C(1).pow(0) == C(1));
    CHECK(C(0).pow(0) == C(1));  // empty product convention
}

TEST_CASE("insertion") {
    const SparsePoly p = X(0) * X(0) + C(2) * X(1);
    const std::vector<BigInt> z{3, 4};
    CHECK(p.insertion(z) == 17);

    auto g = ht::make_rng(0xb1);
    for (int i = 0; i < 100; ++i) {
        const auto pt = ht::random_point(g, 3, 50);
        const long c = ht::rnd(g, -9, 9);
        CHECK(C(c).insertion(pt) == c);
        const VarIndex s = static_cast<VarIndex>(ht::rnd(g, 0, 2));
        CHECK(X(s).insertion(pt) == pt[s]);
    }
    // variables beyond the supplied point are zero
    CHECK(X(9).insertion(z) == 0);
}

TEST_CASE("degree and variable bookkeeping") {
    const SparsePoly p = X(0) * X(1) + X(1) * X(1);
    CHECK(p.vars() == std::set<VarIndex>{0, 1});
    CHECK(p.max_vars() == 1);
    CHECK(p.total_degree() == 2);

    CHECK(C(0).vars().empty());
    CHECK(C(0).max_vars() == 0);
    CHECK(C(0).total_degree() == 0);
    CHECK(C(5).max_vars() == 0);
}

TEST_CASE("term iteration is graded-lex descending") {
    // z1^3 and z1^2*z2 tie on degree; the lower variable index weighs more
    const SparsePoly p = X(1).pow(3) + C(3) * X(1).pow(2) * X(2) - X(0) + C(7);
    std::vector<unsigned long> degs;
    for (const auto& [m, c] : p.terms()) degs.push_back(m.total_degree());
    CHECK(std::is_sorted(degs.rbegin(), degs.rend()));
    CHECK(p.terms().begin()->first == Monomial::variable(1, 3));
}

TEST_CASE("dense expansion round-trips") {
    const SparsePoly p = X(0) * X(0) + C(2) * X(1);
    const auto ts = p.expand_terms();
    REQUIRE(ts.size() == 2);
    CHECK(ts[0].first == std::vector<std::uint32_t>{2, 0});
    CHECK(ts[0].second == 1);
    CHECK(ts[1].first == std::vector<std::uint32_t>{0, 1});
    CHECK(ts[1].second == 2);

    CHECK(C(0).expand_terms().empty());

    const auto cts = C(-3).expand_terms();
    REQUIRE(cts.size() == 1);
    CHECK(cts[0].first == std::vector<std::uint32_t>{0});
    CHECK(cts[0].second == -3);

    auto g = ht::make_rng(0xb2);
    for (int i = 0; i < 200; ++i) {
        const SparsePoly q = ht::random_poly(g, 4, 20, 6, 40);
        std::vector<std::pair<Monomial, BigInt>> rebuilt;
        for (const auto& [idx, c] : q.expand_terms()) {
            std::vector<Monomial::Pair> ps;
            for (VarIndex v = 0; v < idx.size(); ++v)
                if (idx[v] > 0) ps.emplace_back(v, idx[v]);
            rebuilt.emplace_back(Monomial::from_pairs(std::move(ps)), c);
        }
        CHECK(SparsePoly::from_terms(std::move(rebuilt)) == q);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    auto g = ht::make_rng(0xb3);
    for (int i = 0; i < 250; ++i) {
        const SparsePoly p = ht::random_poly(g, 4, 20, 6, 30);
        const SparsePoly q = ht::random_poly(g, 4, 20, 6, 30);
        const SparsePoly r = ht::random_poly(g, 4, 20, 6, 30);
        CHECK(p + q == q + p);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + C(0) == p);
        CHECK(p * C(1) == p);
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("insertion is a ring homomorphism") {
    auto g = ht::make_rng(0xb4);
    for (int i = 0; i < 250; ++i) {
        const SparsePoly p = ht::random_poly(g, 4, 15, 5, 30);
        const SparsePoly q = ht::random_poly(g, 4, 15, 5, 30);
        const auto z = ht::random_point(g, 4, 25);
        CHECK((p + q).insertion(z) == p.insertion(z) + q.insertion(z));
        CHECK((p * q).insertion(z) == p.insertion(z) * q.insertion(z));
    }
}

TEST_CASE("degree inequalities") {
    auto g = ht::make_rng(0xb5);
    for (int i = 0; i < 400; ++i) {
        const SparsePoly p = ht::random_poly(g, 4, 12, 6, 20);
        const SparsePoly q = ht::random_poly(g, 4, 12, 6, 20);
        CHECK((p + q).total_degree() <= std::max(p.total_degree(), q.total_degree()));
        CHECK((p * q).total_degree() <= p.total_degree() + q.total_degree());
        if (!p.is_zero() && !q.is_zero())
            CHECK((p * q).total_degree() == p.total_degree() + q.total_degree());
    }
}

TEST_CASE("bounded multiplication stops at the budget") {
    SparsePoly wide;
    for (VarIndex v = 0; v < 25; ++v) wide += X(v) + X(v) * X(v + 25);
    const auto hit = SparsePoly::mul_bounded(wide, wide, 40);
    CHECK_FALSE(hit.has_value());
    const auto ok = SparsePoly::mul_bounded(wide, wide, 10000);
    REQUIRE(ok.has_value());
    CHECK(*ok == wide * wide);
}

}  // TEST_SUITE
