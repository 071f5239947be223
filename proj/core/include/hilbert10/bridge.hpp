#pragma once

#include "hilbert10/bigint.hpp"
#include "hilbert10/expr.hpp"

namespace h10 {

// Source variables of the bridge system; expression-side indices follow
// field order (X=0, Y=1, b=2, g=3, h=4, k=5, l=6, w=7, x=8, y=9).
struct BridgeInput {
    BigInt X, Y, b, g, h, k, l, w, x, y;
};

namespace bridge_var {
inline constexpr VarIndex X = 0, Y = 1, b = 2, g = 3, h = 4, k = 5, l = 6, w = 7, x = 8,
                          y = 9;
}

// The fourteen derived quantities, each defined by one equation over
// the inputs and its predecessors.
struct BridgeVars {
    BigInt U, V, A, B, C, D, E, F, G, H, I, J, S, T;
};

struct BridgeRelations {
    bool r1;  // D*F*I is a square
    bool r2;  // (U^4 V^2 - 4) J^2 + 4 is a square
    bool r3;  // S divides T
    bool r4;  // (4gC - 4glYJ)^2 < J^2
};

// Expression forms over the ten input variables: the derived chain plus
// the payloads whose squareness/divisibility/positivity the four
// relations test.  r4 is the strict inequality ineq_left < ineq_right,
// equivalently positivity of ineq_right - ineq_left.
struct BridgeExprs {
    Expr U, V, A, B, C, D, E, F, G, H, I, J, S, T;
    Expr square1;     // D*F*I
    Expr square2;     // (U^4 V^2 - 4) J^2 + 4
    Expr ineq_left;   // (4gC - 4glYJ)^2
    Expr ineq_right;  // J^2
};

BridgeVars bridge_vars(const BridgeInput& in);

BridgeRelations bridge_relations(const BridgeInput& in);

// b >= 0, Y >= b, Y >= 2^8, X >= 3b, g >= 1.
bool bridge_hypotheses(const BridgeInput& in);

const BridgeExprs& bridge_relation_exprs();

}  // namespace h10
