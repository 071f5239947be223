#include "hilbert10/bridge.hpp"

#include "hilbert10/arith.hpp"

namespace h10 {

BridgeVars bridge_vars(const BridgeInput& in) {
    BridgeVars v;
    v.U = 2 * in.l * in.X * in.Y;
    v.V = 4 * in.g * in.w * in.Y;
    v.A = v.U * (v.V + 1);
    v.B = 2 * in.X + 1;
    v.C = v.B + (v.A - 2) * in.h;
    v.D = (v.A * v.A - 4) * v.C * v.C + 4;
    v.E = v.C * v.C * v.D * in.x;
    v.F = 4 * (v.A * v.A - 4) * v.E * v.E + 1;
    v.G = 1 + v.C * v.D * v.F - 2 * (v.A + 2) * (v.A - 2) * (v.A - 2) * v.E * v.E;
    v.H = v.C + v.B * v.F + (2 * in.y - 1) * v.C * v.F;
    v.I = (v.G * v.G - 1) * v.H * v.H + 1;
    v.J = in.X + 1 + in.k * (v.U * v.U * v.V - 2);
    v.S = 2 * v.A - 5;
    v.T = 3 * in.b * in.w * v.C - 2 * (in.b * in.b * in.w * in.w - 1);
    return v;
}

BridgeRelations bridge_relations(const BridgeInput& in) {
    const BridgeVars v = bridge_vars(in);
    BridgeRelations r;
    r.r1 = is_square(v.D * v.F * v.I);
    const BigInt u4v2 = v.U * v.U * v.U * v.U * v.V * v.V;
    r.r2 = is_square((u4v2 - 4) * v.J * v.J + 4);
    r.r3 = mpz_divisible_p(v.T.get_mpz_t(), v.S.get_mpz_t());
    const BigInt lhs = 4 * in.g * v.C - 4 * in.g * in.l * in.Y * v.J;
    r.r4 = lhs * lhs < v.J * v.J;
    return r;
}

bool bridge_hypotheses(const BridgeInput& in) {
    return sgn(in.b) >= 0 && in.Y >= in.b && in.Y >= 256 && in.X >= 3 * in.b &&
           in.g >= 1;
}

const BridgeExprs& bridge_relation_exprs() {
    static const BridgeExprs bundle = [] {
        const Expr X = Expr::variable(bridge_var::X);
        const Expr Y = Expr::variable(bridge_var::Y);
        const Expr b = Expr::variable(bridge_var::b);
        const Expr g = Expr::variable(bridge_var::g);
        const Expr h = Expr::variable(bridge_var::h);
        const Expr k = Expr::variable(bridge_var::k);
        const Expr l = Expr::variable(bridge_var::l);
        const Expr w = Expr::variable(bridge_var::w);
        const Expr x = Expr::variable(bridge_var::x);
        const Expr y = Expr::variable(bridge_var::y);
        const Expr c1 = Expr::constant(1);
        const Expr c2 = Expr::constant(2);
        const Expr c3 = Expr::constant(3);
        const Expr c4 = Expr::constant(4);
        const Expr c5 = Expr::constant(5);

        const Expr U = c2 * l * X * Y;
        const Expr V = c4 * g * w * Y;
        const Expr A = U * (V + c1);
        const Expr B = c2 * X + c1;
        const Expr C = B + (A - c2) * h;
        const Expr D = (A * A - c4) * C * C + c4;
        const Expr E = C * C * D * x;
        const Expr F = c4 * (A * A - c4) * E * E + c1;
        const Expr G = c1 + C * D * F - c2 * (A + c2) * (A - c2) * (A - c2) * E * E;
        const Expr H = C + B * F + (c2 * y - c1) * C * F;
        const Expr I = (G * G - c1) * H * H + c1;
        const Expr J = X + c1 + k * (U * U * V - c2);
        const Expr S = c2 * A - c5;
        const Expr T = c3 * b * w * C - c2 * (b * b * w * w - c1);
        const Expr square1 = D * F * I;
        const Expr square2 = (Expr::pow(U, 4ul) * Expr::pow(V, 2ul) - c4) * J * J + c4;
        const Expr ineq_left = Expr::pow(c4 * g * C - c4 * g * l * Y * J, 2ul);
        const Expr ineq_right = J * J;
        return BridgeExprs{U, V, A, B, C, D, E, F, G, H, I,           J,
                           S, T, square1, square2, ineq_left, ineq_right};
    }();
    return bundle;
}

}  // namespace h10
