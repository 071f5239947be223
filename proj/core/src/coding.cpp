#include "hilbert10/coding.hpp"

#include <set>
#include <stdexcept>

#include "hilbert10/arith.hpp"

namespace h10 {

Base::Base(unsigned k) : k_(k) {
    if (k < 2) throw std::domain_error("Base: k must be at least 2");
}

BigInt Base::value() const {
    BigInt v = 1;
    v <<= k_;
    return v;
}

std::vector<BigInt> to_digits(const BigInt& n, Base base) {
    if (sgn(n) < 0) throw std::domain_error("to_digits: negative argument");
    std::vector<BigInt> out;
    BigInt rest = n;
    while (sgn(rest) != 0) {
        BigInt digit;
        mpz_fdiv_r_2exp(digit.get_mpz_t(), rest.get_mpz_t(), base.k());
        out.push_back(std::move(digit));
        rest >>= base.k();
    }
    return out;
}

BigInt digit_at(const BigInt& n, Base base, unsigned long position) {
    if (sgn(n) < 0) throw std::domain_error("digit_at: negative argument");
    BigInt shifted = n >> (position * base.k());
    BigInt digit;
    mpz_fdiv_r_2exp(digit.get_mpz_t(), shifted.get_mpz_t(), base.k());
    return digit;
}

BigInt build_code(const std::vector<BigInt>& digits,
                  const std::vector<unsigned long>& positions, Base base) {
    if (digits.size() != positions.size())
        throw std::domain_error("build_code: digit/position length mismatch");
    const BigInt b = base.value();
    BigInt code = 0;
    for (std::size_t s = 0; s < digits.size(); ++s) {
        if (sgn(digits[s]) < 0 || digits[s] >= b)
            throw std::domain_error("build_code: digit out of range");
        if (s > 0 && positions[s] <= positions[s - 1])
            throw std::domain_error("build_code: positions must be strictly increasing");
        code += digits[s] << (positions[s] * base.k());
    }
    return code;
}

unsigned long carry_count(const BigInt& x, const BigInt& y) {
    if (sgn(x) < 0 || sgn(y) < 0) throw std::domain_error("carry_count: negative argument");
    const BigInt sum = x + y;
    return mpz_popcount(x.get_mpz_t()) + mpz_popcount(y.get_mpz_t()) -
           mpz_popcount(sum.get_mpz_t());
}

namespace {

// Walks every multi-index j with |j| <= d over `len` slots.
template <class Fn>
void each_multi_index(std::vector<unsigned long>& j, std::size_t slot, unsigned long left,
                      Fn&& fn) {
    if (slot == j.size()) {
        fn(j);
        return;
    }
    for (unsigned long v = 0; v <= left; ++v) {
        j[slot] = v;
        each_multi_index(j, slot + 1, left - v, fn);
    }
    j[slot] = 0;
}

}  // namespace

BigInt digit_of_power(const std::vector<BigInt>& z, const std::vector<unsigned long>& n,
                      Base base, unsigned long d, const std::vector<unsigned long>& i) {
    if (z.empty() || z.size() != n.size() || z.size() != i.size())
        throw std::domain_error("digit_of_power: length mismatch");
    unsigned long inorm = 0;
    for (unsigned long is : i) inorm += is;
    if (inorm > d) throw std::domain_error("digit_of_power: |i| exceeds d");

    const BigInt b = base.value();
    const BigInt code = build_code(z, n, base);  // also validates z and n

    // Non-collision precondition: every contribution of (1+code)^d must be
    // a proper digit at its own position.
    std::set<unsigned long> seen;
    std::vector<unsigned long> j(z.size(), 0);
    bool ok = true;
    each_multi_index(j, 0, d, [&](const std::vector<unsigned long>& jj) {
        if (!ok) return;
        BigInt v = multinomial(d, jj);
        unsigned long pos = 0;
        for (std::size_t s = 0; s < jj.size(); ++s) {
            for (unsigned long t = 0; t < jj[s]; ++t) v *= z[s];
            pos += jj[s] * n[s];
        }
        if (v >= b || !seen.insert(pos).second) ok = false;
    });
    if (!ok) throw std::domain_error("digit_of_power: digit collision in coded power");

    const BigInt power = code + 1;
    BigInt k;
    mpz_pow_ui(k.get_mpz_t(), power.get_mpz_t(), d);
    unsigned long pos = 0;
    for (std::size_t s = 0; s < i.size(); ++s) pos += i[s] * n[s];
    return digit_at(k, base, pos);
}

bool is_power2(const BigInt& b) {
    return sgn(b) > 0 && mpz_popcount(b.get_mpz_t()) == 1;
}

}  // namespace h10
