#pragma once

#include <array>
#include <optional>

#include "hilbert10/bigint.hpp"
#include "hilbert10/expr.hpp"
#include "hilbert10/poly.hpp"

namespace h10 {

/*
 * Element of the commutative algebra obtained from the coefficient ring
 * by adjoining three formal square roots s1, s2, s3 subject to
 * s_j^2 = rel[j-1].  One coordinate per squarefree product of the s_j,
 * indexed by bitmask (bit j-1 set means s_j occurs).  Coeff is BigInt
 * for numeric work or SparsePoly for symbolic work.
 */
template <typename Coeff>
struct SqrtAlgebraElement {
    std::array<Coeff, 8> coords{};
};

namespace detail {
inline bool sa_zero(const BigInt& v) { return sgn(v) == 0; }
inline bool sa_zero(const SparsePoly& p) { return p.is_zero(); }
}  // namespace detail

template <typename Coeff>
SqrtAlgebraElement<Coeff> sqrt_mul(const SqrtAlgebraElement<Coeff>& a,
                                   const SqrtAlgebraElement<Coeff>& b,
                                   const std::array<Coeff, 3>& rel) {
    SqrtAlgebraElement<Coeff> out;
    for (unsigned e = 0; e < 8; ++e) {
        if (detail::sa_zero(a.coords[e])) continue;
        for (unsigned f = 0; f < 8; ++f) {
            if (detail::sa_zero(b.coords[f])) continue;
            Coeff c = a.coords[e] * b.coords[f];
            const unsigned common = e & f;
            for (unsigned j = 0; j < 3; ++j)
                if (common & (1u << j)) c = c * rel[j];
            out.coords[e ^ f] += c;
        }
    }
    return out;
}

// Variable layout of the expanded relation-combining polynomial.
namespace m3_var {
inline constexpr VarIndex A1 = 0, A2 = 1, A3 = 2, S = 3, T = 4, R = 5, n = 6;
}

struct M3Instance {
    BigInt A1, A2, A3, S, T, R, n;
    BigInt x3() const { return 1 + A1 * A1 + A2 * A2 + A3 * A3; }
};

// Full expansion of the eight-factor product over the sign vectors, as
// an integer polynomial in the seven m3_var variables.  Computed once
// and cached.  Throws logic_error if any formal-root coordinate of the
// product fails to cancel.
const SparsePoly& m3_expand();

// Exact value of the product at an instance, via the numeric algebra.
BigInt m3_eval(const M3Instance& inst);

// S | T, R > 0 and A1, A2, A3 all perfect squares.  S must be nonzero.
bool relations_hold(const BigInt& A1, const BigInt& A2, const BigInt& A3, const BigInt& S,
                    const BigInt& T, const BigInt& R);

// Smallest n >= 0 with M3(A1,A2,A3,S,T,R,n) = 0, or nullopt if none
// exists.  S must be nonzero.
std::optional<BigInt> m3_exists_nonneg_root(const BigInt& A1, const BigInt& A2,
                                            const BigInt& A3, const BigInt& S,
                                            const BigInt& T, const BigInt& R);

// The sign product expanded over four stand-in variables w,a,b,c
// (indices 0..3): prod over all eight sign choices of (w +- a +- b +- c)
// is even in each variable; this is that product with every exponent
// halved, 35 terms of total degree 4.  The full product is recovered by
// substituting the squares, and in particular
//   M3 = m3_even_form()(W^2, u^2 A1, u^2 A2 X3^2, u^2 A3 X3^4)
// with u = S^2 (2R - 1), X3 = 1 + A1^2 + A2^2 + A3^2 and
// W = S^2 n + T^2 - u (T^2 + X3^3).
const SparsePoly& m3_even_form();

// M3 as an expression DAG over caller-supplied inputs, built from
// m3_even_form without any expansion.
Expr m3_dag(const std::array<Expr, 3>& A, const Expr& S, const Expr& T, const Expr& R,
            const Expr& n);

}  // namespace h10
