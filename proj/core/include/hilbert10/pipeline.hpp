#pragma once

#include <cstddef>

#include "hilbert10/bigint.hpp"
#include "hilbert10/expr.hpp"
#include "hilbert10/poly.hpp"

namespace h10 {

// Closed-form degree bound transported by the reduction:
//   eta(nu, delta) = 15616 + 233856 d + (233952 d + 467712 d^2)(2d+1)^{nu+1}.
// delta must be >= 1.
BigInt eta(unsigned long nu, const BigInt& delta);

// Variable layout of the assembled reduction.  Q lives on a..n; Q-tilde
// replaces n by n1^2 + n2^2 + n3^2 + n3, so index 9 is reused as n1.
namespace q_var {
inline constexpr VarIndex a = 0, f = 1, g = 2, h = 3, k = 4, l = 5, w = 6, x = 7, y = 8,
                          n = 9, n1 = 9, n2 = 10, n3 = 11;
}

/*
 * The three coding polynomials plugged into the bridge system: b over
 * variables {a, f}, Y over {a, f}, X over {a, f, g}, together with the
 * source-dependent constants gamma and alpha that delimit the g-range
 * [b, gamma * b^alpha) of the coding construction.
 *
 * default_coding ships a stand-in with the contractual variable scopes
 * and a degree profile far below eta: gamma = 1 + sum of |coefficients|
 * of P, alpha = delta * (2 delta + 1)^(nu + 1),
 *   b = 2 (f+1)^delta,
 *   X = (g + gamma)(a + f + 1)^(delta + 1),
 *   Y = 1 + sum over terms c*m of P of |c| (a + f + 2)^deg(m).
 */
struct CodingPolynomials {
    Expr b_poly;
    Expr X_poly;
    Expr Y_poly;
    BigInt gamma;
    BigInt alpha;
};

CodingPolynomials default_coding(const SparsePoly& P);

// Q over (a, f, g, h, k, l, w, x, y, n): the bridge relations with
// X, Y, b replaced by the coding polynomials, fed into the M3 slots
// (two tested squares, the constant third square, the S | T pair and
// the inequality margin as the positivity argument).  Pure DAG; never
// expanded.  P must satisfy total_degree >= 1 and the coding
// polynomials their variable scopes.
Expr build_Q(const SparsePoly& P, const CodingPolynomials& cp);

// Q-tilde over (a, f, g, h, k, l, w, x, y, n1, n2, n3): Q with
// n1^2 + n2^2 + n3^2 + n3 in place of n.
Expr build_Q_tilde(const SparsePoly& P, const CodingPolynomials& cp);

struct ReductionReport {
    VarIndex max_var;
    BigInt degree_bound;
    std::size_t node_count;
    BigInt eta_value;
};

// Structural summary of Q-tilde; throws logic_error if the computed
// degree bound exceeds eta(max_vars(P), total_degree(P)).
ReductionReport reduction_report(const SparsePoly& P, const CodingPolynomials& cp);

enum class DomainTag { N, Z };

struct UniversalPair {
    unsigned long nu;
    BigInt delta;
    DomainTag domain_tag;
};

// (nu, delta) over N  ->  (11, eta(nu, delta)) over Z.
UniversalPair derive_universal_pair(const UniversalPair& p);

}  // namespace h10
