#include "hilbert10/arith.hpp"

#include <stdexcept>

namespace h10 {

bool is_square(const BigInt& n) {
    if (sgn(n) < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

BigInt isqrt(const BigInt& n) {
    if (sgn(n) < 0) throw std::domain_error("isqrt: negative argument");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt multinomial(unsigned long d, const std::vector<unsigned long>& parts) {
    unsigned long used = 0;
    for (unsigned long p : parts) {
        if (p > d - used) throw std::domain_error("multinomial: parts exceed d");
        used += p;
    }
    BigInt r = 1;
    unsigned long rem = d;
    for (unsigned long p : parts) {
        r *= binomial(rem, p);
        rem -= p;
    }
    return r;
}

unsigned long nu2(const BigInt& n) {
    if (sgn(n) == 0) throw std::domain_error("nu2: zero has no 2-adic valuation");
    BigInt a = abs(n);
    return mpz_scan1(a.get_mpz_t(), 0);
}

ThreeSquares three_squares_decompose(const BigInt& n) {
    if (sgn(n) < 0) throw std::domain_error("three_squares_decompose: negative argument");
    for (BigInt z = isqrt(n); sgn(z) >= 0; --z) {
        BigInt rem = n - z * z - z;
        if (sgn(rem) < 0) continue;
        const BigInt ymax = isqrt(rem);
        for (BigInt y = 0; y <= ymax; ++y) {
            BigInt rem2 = rem - y * y;
            if (is_square(rem2)) return {isqrt(rem2), y, z};
        }
    }
    // Every nonnegative integer has such a decomposition.
    throw std::logic_error("three_squares_decompose: search exhausted");
}

}  // namespace h10
