#include "hilbert10/combiner.hpp"

#include <stdexcept>

#include "hilbert10/arith.hpp"

namespace h10 {

namespace {

/*
 * The eight factors are multiplied in conjugate pairs: first over the
 * sign of s3, then s2, then s1.  Each pairing step eliminates one
 * formal root exactly ((x + c s)(x - c s) = x^2 - c^2 A), so the
 * intermediate coordinate polynomials stay small.  fac is indexed by
 * sign bitmask, bit j meaning the sign of s_{j+1} is negative.
 */
template <typename Coeff>
SqrtAlgebraElement<Coeff> conjugate_product(std::array<SqrtAlgebraElement<Coeff>, 8> fac,
                                            const std::array<Coeff, 3>& rel) {
    std::array<SqrtAlgebraElement<Coeff>, 4> p3;
    for (unsigned m = 0; m < 4; ++m) p3[m] = sqrt_mul(fac[m], fac[m | 4u], rel);
    std::array<SqrtAlgebraElement<Coeff>, 2> p2;
    for (unsigned m = 0; m < 2; ++m) p2[m] = sqrt_mul(p3[m], p3[m | 2u], rel);
    return sqrt_mul(p2[0], p2[1], rel);
}

template <typename Coeff>
std::array<SqrtAlgebraElement<Coeff>, 8> m3_factors(const std::array<Coeff, 3>& A,
                                                    const Coeff& S, const Coeff& T,
                                                    const Coeff& R, const Coeff& n,
                                                    const Coeff& one) {
    const Coeff X3 = one + A[0] * A[0] + A[1] * A[1] + A[2] * A[2];
    const Coeff u = S * S * (R + R - one);
    const Coeff U = S * S * n + T * T - u * (T * T + X3 * X3 * X3);
    const std::array<Coeff, 3> scaled{u, u * X3, u * X3 * X3};
    std::array<SqrtAlgebraElement<Coeff>, 8> fac;
    for (unsigned mask = 0; mask < 8; ++mask) {
        fac[mask].coords[0] = U;
        for (unsigned j = 0; j < 3; ++j)
            fac[mask].coords[1u << j] =
                (mask & (1u << j)) ? scaled[j] : Coeff() - scaled[j];
    }
    return fac;
}

}  // namespace

const SparsePoly& m3_expand() {
    static const SparsePoly cached = [] {
        const std::array<SparsePoly, 3> A{SparsePoly::variable(m3_var::A1),
                                          SparsePoly::variable(m3_var::A2),
                                          SparsePoly::variable(m3_var::A3)};
        const auto fac = m3_factors<SparsePoly>(
            A, SparsePoly::variable(m3_var::S), SparsePoly::variable(m3_var::T),
            SparsePoly::variable(m3_var::R), SparsePoly::variable(m3_var::n),
            SparsePoly::constant(1));
        const auto prod = conjugate_product<SparsePoly>(fac, A);
        for (unsigned e = 1; e < 8; ++e)
            if (!prod.coords[e].is_zero())
                throw std::logic_error("m3_expand: formal root coordinate did not cancel");
        return prod.coords[0];
    }();
    return cached;
}

BigInt m3_eval(const M3Instance& inst) {
    const std::array<BigInt, 3> A{inst.A1, inst.A2, inst.A3};
    const auto fac =
        m3_factors<BigInt>(A, inst.S, inst.T, inst.R, inst.n, BigInt(1));
    const auto prod = conjugate_product<BigInt>(fac, A);
    for (unsigned e = 1; e < 8; ++e)
        if (sgn(prod.coords[e]) != 0)
            throw std::logic_error("m3_eval: formal root coordinate did not cancel");
    return prod.coords[0];
}

bool relations_hold(const BigInt& A1, const BigInt& A2, const BigInt& A3, const BigInt& S,
                    const BigInt& T, const BigInt& R) {
    if (sgn(S) == 0) throw std::domain_error("relations_hold: S must be nonzero");
    if (!mpz_divisible_p(T.get_mpz_t(), S.get_mpz_t())) return false;
    return sgn(R) > 0 && is_square(A1) && is_square(A2) && is_square(A3);
}

std::optional<BigInt> m3_exists_nonneg_root(const BigInt& A1, const BigInt& A2,
                                            const BigInt& A3, const BigInt& S,
                                            const BigInt& T, const BigInt& R) {
    if (sgn(S) == 0) throw std::domain_error("m3_exists_nonneg_root: S must be nonzero");
    // Any root of M3 is a root of one linear factor
    //   S^2 n + T^2 - u (T^2 + X3^3 + e1 r1 + e2 r2 X3 + e3 r3 X3^2),
    // r_j = sqrt(A_j).  A negative A_j gives every factor a nonzero
    // imaginary part and a nonsquare A_j >= 0 a nonzero irrational
    // part: the root term of highest index cannot be cancelled by the
    // lower ones, because X3 = 1 + A1^2 + A2^2 + A3^2 outgrows every
    // sqrt(A_j).  Either way no integer root exists.
    if (sgn(A1) < 0 || sgn(A2) < 0 || sgn(A3) < 0) return std::nullopt;
    if (!is_square(A1) || !is_square(A2) || !is_square(A3)) return std::nullopt;
    const std::array<BigInt, 3> r{isqrt(A1), isqrt(A2), isqrt(A3)};
    const BigInt X3 = 1 + A1 * A1 + A2 * A2 + A3 * A3;
    const std::array<BigInt, 3> scaled{r[0], r[1] * X3, r[2] * X3 * X3};
    const BigInt T2 = T * T;
    const BigInt S2 = S * S;
    const BigInt u = S2 * (2 * R - 1);
    const BigInt base = T2 + X3 * X3 * X3;
    std::optional<BigInt> best;
    for (unsigned mask = 0; mask < 8; ++mask) {
        BigInt w = base;
        for (unsigned j = 0; j < 3; ++j) w += (mask & (1u << j)) ? -scaled[j] : scaled[j];
        const BigInt num = u * w - T2;
        if (!mpz_divisible_p(num.get_mpz_t(), S2.get_mpz_t())) continue;
        const BigInt cand = num / S2;
        if (sgn(cand) < 0) continue;
        if (sgn(m3_eval({A1, A2, A3, S, T, R, cand})) != 0)
            throw std::logic_error("m3_exists_nonneg_root: candidate failed verification");
        if (!best || cand < *best) best = cand;
    }
    return best;
}

const SparsePoly& m3_even_form() {
    static const SparsePoly cached = [] {
        const SparsePoly w = SparsePoly::variable(0);
        const std::array<SparsePoly, 3> roots{SparsePoly::variable(1),
                                              SparsePoly::variable(2),
                                              SparsePoly::variable(3)};
        SparsePoly prod = SparsePoly::constant(1);
        for (unsigned mask = 0; mask < 8; ++mask) {
            SparsePoly f = w;
            for (unsigned j = 0; j < 3; ++j)
                f += (mask & (1u << j)) ? -roots[j] : roots[j];
            prod *= f;
        }
        std::vector<std::pair<Monomial, BigInt>> halved;
        halved.reserve(prod.term_count());
        for (const auto& [m, coef] : prod.terms()) {
            std::vector<Monomial::Pair> ps;
            for (const auto& [v, e] : m.pairs()) {
                if (e % 2 != 0)
                    throw std::logic_error("m3_even_form: odd exponent in sign product");
                ps.emplace_back(v, e / 2);
            }
            halved.emplace_back(Monomial::from_pairs(std::move(ps)), coef);
        }
        return SparsePoly::from_terms(std::move(halved));
    }();
    return cached;
}

Expr m3_dag(const std::array<Expr, 3>& A, const Expr& S, const Expr& T, const Expr& R,
            const Expr& n) {
    const Expr one = Expr::constant(1);
    const Expr X3 = one + A[0] * A[0] + A[1] * A[1] + A[2] * A[2];
    const Expr u = S * S * (R + R - one);
    const Expr W = S * S * n + T * T - u * (T * T + Expr::pow(X3, 3ul));
    const Expr u2 = u * u;
    return Expr::subst({{0, W * W},
                        {1, u2 * A[0]},
                        {2, u2 * A[1] * Expr::pow(X3, 2ul)},
                        {3, u2 * A[2] * Expr::pow(X3, 4ul)}},
                       to_expr(m3_even_form()));
}

}  // namespace h10
