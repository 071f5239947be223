#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hilbert10/arith.hpp"
#include "hilbert10/bridge.hpp"
#include "hilbert10/coding.hpp"
#include "hilbert10/combiner.hpp"
#include "hilbert10/lucas.hpp"
#include "hilbert10/parse.hpp"
#include "hilbert10/pipeline.hpp"

using namespace h10;

namespace {

SparsePoly random_poly(std::mt19937_64& g, unsigned vars, unsigned terms, unsigned max_exp) {
    std::uniform_int_distribution<long> coeff(-50, 50);
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    std::vector<std::pair<Monomial, BigInt>> ts;
    for (unsigned t = 0; t < terms; ++t) {
        std::vector<Monomial::Pair> ps;
        for (VarIndex v = 0; v < vars; ++v) {
            const unsigned e = exp(g);
            if (e > 0) ps.emplace_back(v, e);
        }
        const long c = coeff(g);
        if (c != 0) ts.emplace_back(Monomial::from_pairs(std::move(ps)), c);
    }
    return SparsePoly::from_terms(std::move(ts));
}

}  // namespace

static void BM_eta(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(eta(58, 4));
}
BENCHMARK(BM_eta);

static void BM_lucas_psi(benchmark::State& state) {
    const unsigned long n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lucas_psi(3, n));
}
BENCHMARK(BM_lucas_psi)->Arg(64)->Arg(512)->Arg(4096);

static void BM_pell_solutions(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(pell_solutions_up_to(5, 500));
}
BENCHMARK(BM_pell_solutions);

static void BM_poly_mul(benchmark::State& state) {
    std::mt19937_64 g(7);
    const unsigned terms = static_cast<unsigned>(state.range(0));
    const SparsePoly a = random_poly(g, 4, terms, 6);
    const SparsePoly b = random_poly(g, 4, terms, 6);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_poly_mul)->Arg(16)->Arg(64)->Arg(256);

static void BM_insertion(benchmark::State& state) {
    std::mt19937_64 g(11);
    const SparsePoly p = random_poly(g, 6, 200, 8);
    const std::vector<BigInt> z{3, -7, 2, 9, -1, 4};
    for (auto _ : state) benchmark::DoNotOptimize(p.insertion(z));
}
BENCHMARK(BM_insertion);

static void BM_parse_print_roundtrip(benchmark::State& state) {
    std::mt19937_64 g(13);
    const std::string src = print_poly(random_poly(g, 4, 60, 7));
    for (auto _ : state) {
        const auto p = parse_poly(src).expand(1 << 16);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_parse_print_roundtrip);

static void BM_carry_count(benchmark::State& state) {
    const BigInt x = (BigInt(1) << 2048) - 1;
    for (auto _ : state) benchmark::DoNotOptimize(carry_count(x, x));
}
BENCHMARK(BM_carry_count);

static void BM_three_squares(benchmark::State& state) {
    BigInt n = (BigInt(1) << 48) + 12345;
    for (auto _ : state) {
        benchmark::DoNotOptimize(three_squares_decompose(n));
        ++n;
    }
}
BENCHMARK(BM_three_squares);

static void BM_m3_eval(benchmark::State& state) {
    const M3Instance inst{4, 9, 16, 3, 6, 2, 5};
    for (auto _ : state) benchmark::DoNotOptimize(m3_eval(inst));
}
BENCHMARK(BM_m3_eval);

static void BM_m3_root_decision(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(m3_exists_nonneg_root(1, 1, 1, 1, 2, 1));
}
BENCHMARK(BM_m3_root_decision);

static void BM_bridge_relations(benchmark::State& state) {
    BridgeInput in{};
    in.X = 6;
    in.Y = 256;
    in.b = 2;
    in.g = 1;
    in.h = 3;
    in.k = 1;
    in.l = 2;
    in.w = 1;
    in.x = 2;
    in.y = 1;
    for (auto _ : state) benchmark::DoNotOptimize(bridge_relations(in));
}
BENCHMARK(BM_bridge_relations);

static void BM_build_q_tilde(benchmark::State& state) {
    std::mt19937_64 g(17);
    SparsePoly P;
    do {
        P = random_poly(g, 4, 5, 3);
    } while (P.total_degree() < 1);
    const CodingPolynomials cp = default_coding(P);
    for (auto _ : state) benchmark::DoNotOptimize(build_Q_tilde(P, cp));
}
BENCHMARK(BM_build_q_tilde);

static void BM_q_tilde_eval(benchmark::State& state) {
    std::mt19937_64 g(19);
    SparsePoly P;
    do {
        P = random_poly(g, 4, 5, 3);
    } while (P.total_degree() < 1);
    const Expr Qt = build_Q_tilde(P, default_coding(P));
    const std::vector<BigInt> z{1, -2, 3, 0, 1, -1, 2, 1, 0, 2, -1, 1};
    for (auto _ : state) benchmark::DoNotOptimize(Qt.eval(z));
}
BENCHMARK(BM_q_tilde_eval);

static void BM_reduction_report(benchmark::State& state) {
    std::mt19937_64 g(23);
    SparsePoly P;
    do {
        P = random_poly(g, 4, 5, 3);
    } while (P.total_degree() < 1);
    const CodingPolynomials cp = default_coding(P);
    for (auto _ : state) benchmark::DoNotOptimize(reduction_report(P, cp));
}
BENCHMARK(BM_reduction_report);

BENCHMARK_MAIN();
