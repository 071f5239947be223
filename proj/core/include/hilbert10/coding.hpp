#pragma once

#include <vector>

#include "hilbert10/bigint.hpp"

namespace h10 {

// Radix 2^k with k > 1, so the base value is at least 4.
class Base {
  public:
    explicit Base(unsigned k);
    unsigned k() const { return k_; }
    BigInt value() const;  // 2^k

  private:
    unsigned k_;
};

// Little-endian digit expansion of n >= 0; the expansion of 0 is empty.
std::vector<BigInt> to_digits(const BigInt& n, Base base);

// Digit of n >= 0 at the given position (0 beyond the expansion).
BigInt digit_at(const BigInt& n, Base base, unsigned long position);

// Sparse code sum(z_i * base^{n_i}) from digits 0 <= z_i < base and
// strictly increasing positions n_i.
BigInt build_code(const std::vector<BigInt>& digits,
                  const std::vector<unsigned long>& positions, Base base);

// Number of carries when adding x and y in binary (x, y >= 0), via
// popcount(x) + popcount(y) - popcount(x+y).
unsigned long carry_count(const BigInt& x, const BigInt& y);

/*
 * Digit-extraction mechanism for coded powers.  With c the code of digits
 * z at positions n, the expansion of (1+c)^d places the product
 * multinomial(d; j) * prod z_s^{j_s} at position sum j_s n_s for every
 * multi-index j with |j| <= d.  When those products stay below the base
 * and the positions are pairwise distinct (checked here, a domain error
 * otherwise), each one can be read back as a single digit; this returns
 * the digit at the position selected by the multi-index i.
 */
BigInt digit_of_power(const std::vector<BigInt>& z, const std::vector<unsigned long>& n,
                      Base base, unsigned long d, const std::vector<unsigned long>& i);

// True for 1, 2, 4, 8, ...
bool is_power2(const BigInt& b);

}  // namespace h10
