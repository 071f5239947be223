#include "hilbert10/pipeline.hpp"

#include <stdexcept>
#include <vector>

#include "hilbert10/bridge.hpp"
#include "hilbert10/combiner.hpp"

namespace h10 {

BigInt eta(unsigned long nu, const BigInt& delta) {
    if (delta < 1) throw std::domain_error("eta: delta must be >= 1");
    const BigInt base = 2 * delta + 1;
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), nu + 1);
    return 15616 + 233856 * delta + (233952 * delta + 467712 * delta * delta) * power;
}

CodingPolynomials default_coding(const SparsePoly& P) {
    const unsigned long delta = P.total_degree();
    const unsigned long nu = P.max_vars();
    BigInt gamma = 1;
    for (const auto& [m, c] : P.terms()) gamma += abs(c);
    BigInt alpha;
    {
        const BigInt base = 2 * BigInt(delta) + 1;
        mpz_pow_ui(alpha.get_mpz_t(), base.get_mpz_t(), nu + 1);
        alpha *= delta;
    }
    const Expr a = Expr::variable(q_var::a);
    const Expr f = Expr::variable(q_var::f);
    const Expr g = Expr::variable(q_var::g);
    const Expr one = Expr::constant(1);
    const Expr b_poly = Expr::constant(2) * Expr::pow(f + one, delta);
    const Expr X_poly = (g + Expr::constant(gamma)) * Expr::pow(a + f + one, delta + 1);
    const Expr af2 = a + f + Expr::constant(2);
    std::vector<Expr> parts;
    parts.reserve(P.term_count() + 1);
    for (const auto& [m, c] : P.terms())
        parts.push_back(Expr::constant(abs(c)) * Expr::pow(af2, m.total_degree()));
    parts.push_back(one);
    return CodingPolynomials{b_poly, X_poly, Expr::add(std::move(parts)), gamma, alpha};
}

namespace {

void check_scope(const Expr& e, VarIndex limit, const char* name) {
    for (VarIndex v : e.var_bound())
        if (v > limit)
            throw std::domain_error(std::string("build_Q: ") + name +
                                    " uses a variable outside its scope");
}

}  // namespace

Expr build_Q(const SparsePoly& P, const CodingPolynomials& cp) {
    if (P.total_degree() < 1)
        throw std::domain_error("build_Q: P must have total degree >= 1");
    check_scope(cp.b_poly, q_var::f, "b_poly");
    check_scope(cp.Y_poly, q_var::f, "Y_poly");
    check_scope(cp.X_poly, q_var::g, "X_poly");

    // Intermediate layout: the ten bridge inputs on 0..9, n on 10.
    const BridgeExprs& bx = bridge_relation_exprs();
    const Expr Q_raw = m3_dag({bx.square1, bx.square2, Expr::constant(1)}, bx.S, bx.T,
                              bx.ineq_right - bx.ineq_left, Expr::variable(10));

    std::vector<SubstBinding> onto{{bridge_var::X, cp.X_poly},
                                   {bridge_var::Y, cp.Y_poly},
                                   {bridge_var::b, cp.b_poly},
                                   {bridge_var::g, Expr::variable(q_var::g)},
                                   {bridge_var::h, Expr::variable(q_var::h)},
                                   {bridge_var::k, Expr::variable(q_var::k)},
                                   {bridge_var::l, Expr::variable(q_var::l)},
                                   {bridge_var::w, Expr::variable(q_var::w)},
                                   {bridge_var::x, Expr::variable(q_var::x)},
                                   {bridge_var::y, Expr::variable(q_var::y)},
                                   {10, Expr::variable(q_var::n)}};
    return Expr::subst(std::move(onto), Q_raw);
}

Expr build_Q_tilde(const SparsePoly& P, const CodingPolynomials& cp) {
    const Expr n1 = Expr::variable(q_var::n1);
    const Expr n2 = Expr::variable(q_var::n2);
    const Expr n3 = Expr::variable(q_var::n3);
    return Expr::subst({{q_var::n, n1 * n1 + n2 * n2 + n3 * n3 + n3}}, build_Q(P, cp));
}

ReductionReport reduction_report(const SparsePoly& P, const CodingPolynomials& cp) {
    const Expr qt = build_Q_tilde(P, cp);
    const auto vars = qt.var_bound();
    ReductionReport rep{vars.empty() ? 0 : *vars.rbegin(), qt.degree_bound(DegreeEnv()),
                        qt.node_count(), eta(P.max_vars(), BigInt(P.total_degree()))};
    if (rep.degree_bound > rep.eta_value)
        throw std::logic_error(
            "reduction_report: degree bound exceeds eta(nu, delta); coding polynomials "
            "do not match the pipeline contract");
    return rep;
}

UniversalPair derive_universal_pair(const UniversalPair& p) {
    if (p.domain_tag != DomainTag::N)
        throw std::domain_error("derive_universal_pair: input pair must be over N");
    return UniversalPair{11, eta(p.nu, p.delta), DomainTag::Z};
}

}  // namespace h10
