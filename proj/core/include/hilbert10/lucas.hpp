#pragma once

#include <utility>
#include <vector>

#include "hilbert10/bigint.hpp"

namespace h10 {

// Second-order sequences x_{n+1} = A*x_n - x_{n-1}:
//   psi: 0, 1, A, A^2-1, ...     chi: 2, A, A^2-2, ...
BigInt lucas_psi(const BigInt& A, unsigned long n);
BigInt lucas_chi(const BigInt& A, unsigned long n);

// Integer-index extensions: psi is odd in n, chi is even in n.
BigInt lucas_psi_int(const BigInt& A, const BigInt& n);
BigInt lucas_chi_int(const BigInt& A, const BigInt& n);

// Checks (A^2-4)*psi(A,m)^2 + 4 == chi(A,m)^2 at integer index m.
bool pell_check(const BigInt& A, const BigInt& m);

// All integer solutions (X, Y) of X^2 - (A^2-4)Y^2 = 4 with |Y| <= bound,
// enumerated as Lucas pairs over integer indices with both sign choices.
// Requires |A| > 2; returned sorted by (Y, X).
std::vector<std::pair<BigInt, BigInt>> pell_solutions_up_to(const BigInt& A,
                                                            const BigInt& bound);

// True iff (A^2-4)Y^2 + 4 is a perfect square, i.e. Y occurs in the
// integer-index psi sequence for A.
bool is_lucas_psi_value(const BigInt& A, const BigInt& Y);

}  // namespace h10
