#include "hilbert10/selfcheck.hpp"

#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include "hilbert10/arith.hpp"
#include "hilbert10/bridge.hpp"
#include "hilbert10/coding.hpp"
#include "hilbert10/combiner.hpp"
#include "hilbert10/lucas.hpp"
#include "hilbert10/parse.hpp"
#include "hilbert10/pipeline.hpp"
#include "hilbert10/poly.hpp"

namespace h10 {

namespace {

using Rng = std::mt19937_64;

void expect(SuiteResult& r, bool ok, const char* what) {
    ++r.checks;
    if (!ok) r.failures.emplace_back(what);
}

long rnd(Rng& g, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(g);
}

SparsePoly random_poly(Rng& g, VarIndex vars, unsigned max_terms, unsigned max_exp,
                       long coeff_mag) {
    std::vector<std::pair<Monomial, BigInt>> terms;
    const unsigned nt = static_cast<unsigned>(rnd(g, 0, max_terms));
    for (unsigned t = 0; t < nt; ++t) {
        std::vector<Monomial::Pair> ps;
        for (VarIndex v = 0; v < vars; ++v) {
            const auto e = static_cast<std::uint32_t>(rnd(g, 0, max_exp));
            if (e > 0) ps.emplace_back(v, e);
        }
        terms.emplace_back(Monomial::from_pairs(std::move(ps)),
                           BigInt(rnd(g, -coeff_mag, coeff_mag)));
    }
    return SparsePoly::from_terms(std::move(terms));
}

std::vector<BigInt> random_point(Rng& g, std::size_t len, long mag) {
    std::vector<BigInt> z(len);
    for (auto& v : z) v = rnd(g, -mag, mag);
    return z;
}

Expr random_dag(Rng& g, unsigned depth) {
    if (depth == 0) {
        if (rnd(g, 0, 1) == 0) return Expr::constant(rnd(g, -9, 9));
        return Expr::variable(static_cast<VarIndex>(rnd(g, 0, 3)));
    }
    switch (rnd(g, 0, 3)) {
        case 0: {
            std::vector<Expr> ops;
            const int n = static_cast<int>(rnd(g, 2, 3));
            for (int i = 0; i < n; ++i) ops.push_back(random_dag(g, depth - 1));
            return Expr::add(std::move(ops));
        }
        case 1: {
            std::vector<Expr> ops;
            const int n = static_cast<int>(rnd(g, 2, 3));
            for (int i = 0; i < n; ++i) ops.push_back(random_dag(g, depth - 1));
            return Expr::mul(std::move(ops));
        }
        case 2:
            return Expr::pow(random_dag(g, depth - 1),
                             static_cast<unsigned long>(rnd(g, 0, 3)));
        default: {
            std::vector<SubstBinding> binds;
            const auto nb = static_cast<VarIndex>(rnd(g, 1, 2));
            for (VarIndex v = 0; v < nb; ++v)
                binds.push_back({static_cast<VarIndex>(rnd(g, 0, 3)),
                                 random_dag(g, depth > 1 ? depth - 2 : 0)});
            std::set<VarIndex> seen;
            std::vector<SubstBinding> unique;
            for (auto& b : binds)
                if (seen.insert(b.var).second) unique.push_back(std::move(b));
            return Expr::subst(std::move(unique), random_dag(g, depth - 1));
        }
    }
}

void suite_arith(Rng& g, SuiteResult& r) {
    for (int i = 0; i < 200; ++i) {
        const BigInt n = rnd(g, 0, 1'000'000'000L);
        const BigInt s = isqrt(n);
        expect(r, s * s <= n && n < (s + 1) * (s + 1), "isqrt bracketing");
        expect(r, is_square(n * n), "square recognized");
        if (n >= 1) expect(r, !is_square(n * n + 1), "near-square rejected");
    }
    expect(r, !is_square(BigInt(-4)), "negative never square");
    for (int i = 0; i < 100; ++i) {
        const auto n = static_cast<unsigned long>(rnd(g, 1, 60));
        const auto k = static_cast<unsigned long>(rnd(g, 1, n));
        expect(r, binomial(n, k) == binomial(n - 1, k - 1) + (k < n ? binomial(n - 1, k) : 0),
               "Pascal rule");
    }
    for (int i = 0; i < 100; ++i) {
        const auto a = static_cast<unsigned long>(rnd(g, 0, 20));
        const auto b = static_cast<unsigned long>(rnd(g, 0, 20));
        expect(r, multinomial(a + b, {a, b}) == binomial(a + b, a),
               "multinomial vs binomial");
        expect(r, multinomial(a + b, {a}) == binomial(a + b, a),
               "implicit remainder bucket");
    }
    for (int i = 0; i < 100; ++i) {
        const auto k = static_cast<unsigned long>(rnd(g, 0, 50));
        const BigInt odd = 2 * BigInt(rnd(g, 0, 1'000'000L)) + 1;
        expect(r, nu2(odd << k) == k, "2-adic valuation");
    }
    for (int i = 0; i < 100; ++i) {
        const BigInt n = rnd(g, 0, 1'000'000L);
        const ThreeSquares t = three_squares_decompose(n);
        expect(r, t.x * t.x + t.y * t.y + t.z * t.z + t.z == n &&
                      sgn(t.x) >= 0 && sgn(t.y) >= 0 && sgn(t.z) >= 0,
               "three-squares witness");
    }
}

void suite_poly(Rng& g, SuiteResult& r) {
    for (int i = 0; i < 150; ++i) {
        const SparsePoly a = random_poly(g, 3, 6, 4, 9);
        const SparsePoly b = random_poly(g, 3, 6, 4, 9);
        const SparsePoly c = random_poly(g, 3, 6, 4, 9);
        expect(r, a + b == b + a, "additive commutativity");
        expect(r, (a + b) + c == a + (b + c), "additive associativity");
        expect(r, a * b == b * a, "multiplicative commutativity");
        expect(r, (a * b) * c == a * (b * c), "multiplicative associativity");
        expect(r, a * (b + c) == a * b + a * c, "distributivity");
        expect(r, (a - a).is_zero(), "additive inverse");
        const auto z = random_point(g, 3, 5);
        expect(r, (a * b + c).insertion(z) == a.insertion(z) * b.insertion(z) + c.insertion(z),
               "insertion homomorphism");
        if (!a.is_zero() && !b.is_zero()) {
            expect(r, (a * b).total_degree() == a.total_degree() + b.total_degree(),
                   "degree multiplicative");
            expect(r, (a + b).is_zero() ||
                          (a + b).total_degree() <=
                              std::max(a.total_degree(), b.total_degree()),
                   "degree of sum bounded");
        }
        expect(r, a.pow(3) == a * a * a, "small power");
        const auto full = SparsePoly::mul_bounded(a, b, 1u << 20);
        expect(r, full && *full == a * b, "bounded product, generous budget");
    }
}

void suite_expr(Rng& g, SuiteResult& r) {
    for (int i = 0; i < 150; ++i) {
        const Expr e = random_dag(g, 3);
        const auto expanded = e.expand(4096);
        if (!expanded) continue;
        const auto z = random_point(g, 4, 4);
        expect(r, e.eval(z) == expanded->insertion(z), "eval equals expanded insertion");
        expect(r, e.degree_bound(DegreeEnv()) >= expanded->total_degree(),
               "degree bound sound");
        const auto vb = e.var_bound();
        bool covered = true;
        for (const auto& [m, c] : expanded->terms())
            for (const auto& [v, ex] : m.pairs())
                if (!vb.contains(v)) covered = false;
        expect(r, covered, "var bound covers expansion");
    }
    const Expr x = Expr::variable(0);
    expect(r, (x + Expr::constant(1)).identical(x + Expr::constant(1)),
           "structural sharing");
    const Expr s = Expr::subst({{0, Expr::variable(1)}}, x * x + Expr::variable(1));
    expect(r, s.eval(std::vector<BigInt>{BigInt(5), BigInt(3)}) == 12,
           "substitution leaves other variables alone");
}

void suite_parse(Rng& g, SuiteResult& r) {
    for (int i = 0; i < 200; ++i) {
        const SparsePoly p = random_poly(g, 4, 8, 5, 50);
        const auto back = parse_poly(print_poly(p)).expand(1u << 16);
        expect(r, back && *back == p, "print/parse round trip");
    }
    expect(r, print_poly(SparsePoly()) == "0", "zero prints as 0");
    for (const char* bad : {"2^3^2", "z", "(a", "a 1", "3**4", "", "^2", "x-"}) {
        ++r.checks;
        try {
            parse_poly(bad);
            r.failures.emplace_back("malformed input accepted");
        } catch (const ParseError&) {
        }
    }
    ++r.checks;
    try {
        parse_poly("a +\n z");
        r.failures.emplace_back("malformed input accepted");
    } catch (const ParseError& e) {
        if (e.line() != 2 || e.column() != 2)
            r.failures.emplace_back("error position off");
    }
}

void suite_coding(Rng& g, SuiteResult& r) {
    for (int i = 0; i < 100; ++i) {
        const Base base(static_cast<unsigned>(rnd(g, 2, 12)));
        const BigInt n = rnd(g, 0, 1'000'000'000L);
        const auto digits = to_digits(n, base);
        BigInt rebuilt = 0;
        BigInt place = 1;
        for (const auto& d : digits) {
            expect(r, sgn(d) >= 0 && d < base.value(), "digit in range");
            rebuilt += d * place;
            place *= base.value();
        }
        expect(r, rebuilt == n, "digit expansion rebuilds value");
        expect(r, digits.empty() || sgn(digits.back()) != 0, "no leading zero digit");
    }
    for (int i = 0; i < 60; ++i) {
        const BigInt X = rnd(g, 1, 2000);
        expect(r, carry_count(X, X) == nu2(binomial(2 * X.get_ui(), X.get_ui())),
               "carries equal 2-adic valuation of central binomial");
    }
    for (int i = 0; i < 50; ++i) {
        const Base base(static_cast<unsigned>(rnd(g, 8, 16)));
        std::vector<BigInt> z{rnd(g, 0, 3), rnd(g, 0, 3)};
        std::vector<unsigned long> pos{static_cast<unsigned long>(rnd(g, 0, 2)),
                                       static_cast<unsigned long>(rnd(g, 5, 8))};
        const unsigned long d = 2;
        std::vector<unsigned long> idx{1, 1};
        try {
            const BigInt got = digit_of_power(z, pos, base, d, idx);
            const BigInt want = multinomial(d, idx) * z[0] * z[1];
            expect(r, got == want, "digit of power matches multinomial");
        } catch (const std::domain_error&) {
            ++r.checks;  // collision-rejected parameter set
        }
    }
}

void suite_lucas(Rng& g, SuiteResult& r) {
    for (long A = -20; A <= 20; ++A) {
        for (unsigned long n = 1; n <= 40; ++n) {
            expect(r, lucas_psi(A, n + 1) == A * lucas_psi(A, n) - lucas_psi(A, n - 1),
                   "psi recurrence");
            expect(r, lucas_chi(A, n + 1) == A * lucas_chi(A, n) - lucas_chi(A, n - 1),
                   "chi recurrence");
        }
    }
    for (int i = 0; i < 200; ++i) {
        const BigInt A = rnd(g, -20, 20);
        const BigInt m = rnd(g, -25, 25);
        expect(r, pell_check(A, m), "Pell identity");
        expect(r, lucas_psi_int(A, -m) == -lucas_psi_int(A, m), "psi odd");
        expect(r, lucas_chi_int(A, -m) == lucas_chi_int(A, m), "chi even");
    }
    for (long A = 2; A <= 12; ++A) {
        for (unsigned long n = 2; n <= 15; ++n) {
            BigInt lo, hi;
            mpz_ui_pow_ui(lo.get_mpz_t(), static_cast<unsigned long>(A - 1), n);
            mpz_ui_pow_ui(hi.get_mpz_t(), static_cast<unsigned long>(A), n);
            const BigInt mid = lucas_psi(A, n + 1);
            expect(r, lo < mid && mid < hi, "growth envelope");
        }
    }
    for (long A = 3; A <= 8; ++A) {
        const BigInt bound = 80;
        std::set<std::pair<BigInt, BigInt>> brute;
        const BigInt d = BigInt(A) * A - 4;
        for (BigInt Y = -bound; Y <= bound; ++Y) {
            const BigInt t = d * Y * Y + 4;
            if (sgn(t) < 0 || !is_square(t)) continue;
            const BigInt X = isqrt(t);
            brute.emplace(X, Y);
            brute.emplace(-X, Y);
        }
        const auto pairs = pell_solutions_up_to(A, bound);
        std::set<std::pair<BigInt, BigInt>> lucas(pairs.begin(), pairs.end());
        expect(r, brute == lucas, "Pell solutions are the Lucas pairs");
    }
}

void suite_combiner(Rng& g, SuiteResult& r) {
    expect(r, sgn(m3_eval({0, 0, 0, 1, 0, 1, 1})) == 0, "collapsed instance vanishes");
    expect(r, m3_eval({0, 0, 0, 1, 0, 0, 0}) == 1, "unit instance");
    const auto w1 = m3_exists_nonneg_root(0, 0, 0, 1, 0, 1);
    expect(r, w1 && *w1 == 1, "root of collapsed instance");
    expect(r, !m3_exists_nonneg_root(0, 0, 0, 1, 0, 0), "negative-only root rejected");
    const SparsePoly& M = m3_expand();
    expect(r, M.total_degree() == 72, "expanded degree");
    for (int i = 0; i < 10; ++i) {
        const auto z = random_point(g, 7, 4);
        expect(r, M.insertion(z) == m3_eval({z[0], z[1], z[2], z[3], z[4], z[5], z[6]}),
               "factored and expanded evaluation agree");
    }
    for (int i = 0; i < 1000; ++i) {
        const BigInt A1 = rnd(g, 0, 9), A2 = rnd(g, 0, 9), A3 = rnd(g, 0, 9);
        BigInt S = rnd(g, -4, 4);
        if (sgn(S) == 0) S = 1;
        const BigInt T = rnd(g, -8, 8), R = rnd(g, -3, 5);
        expect(r, relations_hold(A1, A2, A3, S, T, R) ==
                      m3_exists_nonneg_root(A1, A2, A3, S, T, R).has_value(),
               "relation combining equivalence");
    }
    std::array<Expr, 3> Av{Expr::variable(0), Expr::variable(1), Expr::variable(2)};
    const Expr dag = m3_dag(Av, Expr::variable(3), Expr::variable(4), Expr::variable(5),
                            Expr::variable(6));
    expect(r, dag.degree_bound(DegreeEnv()) == 72, "factored-form degree bound");
    for (int i = 0; i < 20; ++i) {
        const auto z = random_point(g, 7, 6);
        expect(r, dag.eval(z) == m3_eval({z[0], z[1], z[2], z[3], z[4], z[5], z[6]}),
               "expression form agrees");
    }
}

void suite_bridge(Rng& g, SuiteResult& r) {
    const BridgeExprs& e = bridge_relation_exprs();
    for (int i = 0; i < 100; ++i) {
        const auto z = random_point(g, 10, 50);
        const BridgeInput in{z[0], z[1], z[2], z[3], z[4], z[5], z[6], z[7], z[8], z[9]};
        const BridgeVars v = bridge_vars(in);
        expect(r, e.U.eval(z) == v.U && e.V.eval(z) == v.V && e.A.eval(z) == v.A &&
                      e.B.eval(z) == v.B && e.C.eval(z) == v.C && e.D.eval(z) == v.D &&
                      e.E.eval(z) == v.E && e.F.eval(z) == v.F && e.G.eval(z) == v.G &&
                      e.H.eval(z) == v.H && e.I.eval(z) == v.I && e.J.eval(z) == v.J &&
                      e.S.eval(z) == v.S && e.T.eval(z) == v.T,
               "variable chain agrees");
        const BridgeRelations rel = bridge_relations(in);
        expect(r, rel.r1 == is_square(e.square1.eval(z)) &&
                      rel.r2 == is_square(e.square2.eval(z)) &&
                      rel.r4 == (e.ineq_left.eval(z) < e.ineq_right.eval(z)),
               "relations agree");
    }
    expect(r, bridge_hypotheses({0, 256, 0, 1, 0, 0, 0, 0, 0, 0}), "hypothesis boundary");
    expect(r, !bridge_hypotheses({0, 255, 0, 1, 0, 0, 0, 0, 0, 0}), "Y too small");
    expect(r, !bridge_hypotheses({5, 256, 2, 1, 0, 0, 0, 0, 0, 0}), "X below 3b");
    const BridgeInput j0{-1, 3, 0, 1, 1, 0, 1, 1, 1, 1};
    expect(r, sgn(bridge_vars(j0).J) == 0 && !bridge_relations(j0).r4,
           "strict inequality fails at J = 0");
}

void suite_pipeline(Rng& g, SuiteResult& r) {
    expect(r, eta(0, 1) == 2354464, "eta base value");
    expect(r, to_string(eta(32, 12)) ==
                  "950817549694171759711025515571236610412597656252821888",
           "eta reproduces the published pair");
    BigInt prev_row = 0;
    for (unsigned long nu = 0; nu <= 20; ++nu) {
        BigInt prev = 0;
        for (long delta = 1; delta <= 8; ++delta) {
            const BigInt v = eta(nu, delta);
            expect(r, v > prev, "eta monotone in delta");
            prev = v;
        }
        expect(r, prev > prev_row, "eta monotone in nu");
        prev_row = prev;
    }
    for (int i = 0; i < 5; ++i) {
        SparsePoly P = random_poly(g, 3, 5, 3, 9);
        if (P.total_degree() < 1) P += SparsePoly::variable(1);
        const CodingPolynomials cp = default_coding(P);
        const Expr Q = build_Q(P, cp);
        const Expr Qt = build_Q_tilde(P, cp);
        const auto vb = Qt.var_bound();
        expect(r, *vb.rbegin() <= 11 && vb.contains(9) && vb.contains(10) && vb.contains(11),
               "Q-tilde variable scope");
        const ReductionReport rep = reduction_report(P, cp);
        expect(r, rep.max_var == 11 && rep.degree_bound <= rep.eta_value &&
                      rep.node_count > 0,
               "reduction report invariants");
        for (int p = 0; p < 10; ++p) {
            auto z = random_point(g, 12, 3);
            std::vector<BigInt> zq(z.begin(), z.begin() + 9);
            zq.push_back(z[9] * z[9] + z[10] * z[10] + z[11] * z[11] + z[11]);
            expect(r, Qt.eval(z) == Q.eval(zq), "three-squares substitution identity");
        }
    }
    const auto pair = derive_universal_pair({32, 12, DomainTag::N});
    expect(r, pair.nu == 11 && pair.domain_tag == DomainTag::Z &&
                  pair.delta == eta(32, 12),
           "universal pair derivation");
    ++r.checks;
    try {
        derive_universal_pair({11, 100, DomainTag::Z});
        r.failures.emplace_back("wrong domain tag accepted");
    } catch (const std::domain_error&) {
    }
}

struct Suite {
    const char* name;
    void (*run)(Rng&, SuiteResult&);
};

constexpr Suite kSuites[] = {
    {"arith", suite_arith},       {"poly", suite_poly},     {"expr", suite_expr},
    {"parse", suite_parse},       {"coding", suite_coding}, {"lucas", suite_lucas},
    {"combiner", suite_combiner}, {"bridge", suite_bridge}, {"pipeline", suite_pipeline},
};

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const Suite& s : kSuites) names.emplace_back(s.name);
    return names;
}

std::uint64_t selfcheck_seed() {
    if (const char* env = std::getenv("HILBERT10_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0x48696c6265727431ULL;
}

std::vector<SuiteResult> run_suites(const std::string& name) {
    std::vector<SuiteResult> results;
    const std::uint64_t seed = selfcheck_seed();
    for (const Suite& s : kSuites) {
        if (name != "all" && name != s.name) continue;
        SuiteResult res;
        res.name = s.name;
        Rng rng(seed ^ std::hash<std::string_view>{}(s.name));
        s.run(rng, res);
        results.push_back(std::move(res));
    }
    if (results.empty()) throw std::domain_error("unknown suite: " + name);
    return results;
}

}  // namespace h10
