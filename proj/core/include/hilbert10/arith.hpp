#pragma once

#include <vector>

#include "hilbert10/bigint.hpp"

namespace h10 {

// True iff n is a perfect square (negative n is never one).
bool is_square(const BigInt& n);

// Floor of the square root. Requires n >= 0.
BigInt isqrt(const BigInt& n);

// Binomial coefficient C(n, k). Requires k <= n.
BigInt binomial(unsigned long n, unsigned long k);

// Multinomial coefficient d! / (p_1! ... p_r! (d - sum p)!).
// Requires sum of parts <= d; parts shorter than the full split are padded
// with the implicit remainder bucket.
BigInt multinomial(unsigned long d, const std::vector<unsigned long>& parts);

// 2-adic valuation: the largest e with 2^e | n. Requires n != 0.
unsigned long nu2(const BigInt& n);

// Witness for n = x^2 + y^2 + z^2 + z with x, y, z >= 0.
struct ThreeSquares {
    BigInt x, y, z;
};

// Deterministic decomposition of n >= 0: z runs from isqrt(n) downward,
// y upward from 0, x is fixed by the square test on the remainder.
ThreeSquares three_squares_decompose(const BigInt& n);

}  // namespace h10
