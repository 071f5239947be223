#include "doctest.h"

#include <vector>

#include "hilbert10/arith.hpp"
#include "hilbert10/coding.hpp"
#include "support.hpp"

using namespace h10;
namespace ht = h10::testing;

namespace {

// School addition in binary, counting carry events.  Written against the
// definition, not the popcount identity the library uses.
unsigned long school_carries(BigInt x, BigInt y) {
    unsigned long carries = 0;
    BigInt carry = 0;
    while (x > 0 || y > 0 || carry > 0) {
        const BigInt s = x % 2 + y % 2 + carry;
        carry = s >= 2 ? 1 : 0;
        if (carry == 1) ++carries;
        x /= 2;
        y /= 2;
    }
    return carries;
}

}  // namespace

TEST_SUITE("coding") {

TEST_CASE("base must be a power of two of at least 4") {
    CHECK(Base(2).value() == 4);
    CHECK(Base(4).value() == 16);
    CHECK_THROWS_AS(Base(0), std::domain_error);
    CHECK_THROWS_AS(Base(1), std::domain_error);
}

TEST_CASE("digit expansions") {
    const Base b16(4);
    CHECK(to_digits(1089, b16) == std::vector<BigInt>{1, 4, 4});  // 1 + 4*16 + 4*256
    CHECK(to_digits(0, b16).empty());
    CHECK_THROWS_AS(to_digits(-3, b16), std::domain_error);

    BigInt b5 = 1;
    for (int i = 0; i < 5; ++i) b5 *= 16;
    CHECK(digit_at(b5, b16, 5) == 1);
    CHECK(digit_at(b5, b16, 4) == 0);
    CHECK(digit_at(b5, b16, 6) == 0);
    CHECK(digit_at(7, b16, 12345) == 0);

    // divmod oracle against the vector expansion
    auto g = ht::make_rng(0xe1);
    for (int i = 0; i < 200; ++i) {
        const Base base(static_cast<unsigned>(ht::rnd(g, 2, 9)));
        BigInt n = BigInt(ht::rnd(g, 0, 1L << 40)) * BigInt(ht::rnd(g, 1, 1L << 20));
        const auto ds = to_digits(n, base);
        if (n == 0) CHECK(ds.empty());
        if (!ds.empty()) CHECK(ds.back() != 0);
        BigInt rebuilt = 0;
        for (std::size_t j = ds.size(); j-- > 0;) rebuilt = rebuilt * base.value() + ds[j];
        CHECK(rebuilt == n);
        for (std::size_t j = 0; j < ds.size(); ++j) CHECK(digit_at(n, base, j) == ds[j]);
    }
}

TEST_CASE("code construction") {
    const Base b4(2);
    CHECK(build_code({3, 1}, {1, 2}, b4) == 28);
    CHECK(build_code({}, {}, b4) == 0);
    CHECK(build_code({1, 1, 1}, {0, 1, 2}, b4) == 21);

    CHECK_THROWS_AS(build_code({4}, {0}, b4), std::domain_error);       // digit = base
    CHECK_THROWS_AS(build_code({-1}, {0}, b4), std::domain_error);
    CHECK_THROWS_AS(build_code({1, 1}, {2, 2}, b4), std::domain_error); // not increasing
    CHECK_THROWS_AS(build_code({1, 1}, {3, 1}, b4), std::domain_error);
    CHECK_THROWS_AS(build_code({1, 1}, {0}, b4), std::domain_error);    // length mismatch

    // every built code reads back digit-by-digit
    auto g = ht::make_rng(0xe2);
    for (int i = 0; i < 100; ++i) {
        const Base base(static_cast<unsigned>(ht::rnd(g, 2, 6)));
        std::vector<BigInt> z;
        std::vector<unsigned long> pos;
        unsigned long p = 0;
        for (int j = ht::rnd(g, 0, 5); j-- > 0;) {
            p += static_cast<unsigned long>(ht::rnd(g, 1, 4));
            pos.push_back(p);
            z.emplace_back(ht::rnd(g, 1, 3));
        }
        const BigInt c = build_code(z, pos, base);
        for (std::size_t j = 0; j < z.size(); ++j) CHECK(digit_at(c, base, pos[j]) == z[j]);
    }
}

TEST_CASE("carry counting") {
    CHECK(carry_count(3, 3) == 2);
    CHECK(carry_count(4, 4) == 1);
    CHECK(carry_count(12345, 0) == 0);
    CHECK_THROWS_AS(carry_count(-1, 2), std::domain_error);

    auto g = ht::make_rng(0xe3);
    for (int i = 0; i < 300; ++i) {
        const BigInt x(ht::rnd(g, 0, 1L << 45));
        const BigInt y(ht::rnd(g, 0, 1L << 45));
        CHECK(carry_count(x, y) == school_carries(x, y));
    }
}

TEST_CASE("carries of a doubled number measure the central binomial") {
    for (long x = 1; x <= 300; ++x) {
        BigInt central;
        mpz_bin_uiui(central.get_mpz_t(), 2 * static_cast<unsigned long>(x),
                     static_cast<unsigned long>(x));
        CHECK(carry_count(x, x) == nu2(central));
    }
}

TEST_CASE("digit of a power matches the multinomial prediction") {
    const Base b16(4);
    CHECK(digit_of_power({2}, {1}, b16, 2, {1}) == 4);  // (1+32)^2 = 1089, digit 1
    CHECK(digit_of_power({2}, {1}, b16, 2, {2}) == 4);  // digit 2 of 1089
    CHECK(digit_of_power({2}, {1}, b16, 2, {0}) == 1);  // constant term
    CHECK(digit_of_power({2, 1}, {2, 9}, Base(5), 3, {0, 0}) == 1);

    // multinomial * product of digit powers, computed directly
    auto g = ht::make_rng(0xe4);
    int done = 0;
    while (done < 200) {
        const unsigned k = static_cast<unsigned>(ht::rnd(g, 8, 12));
        const Base base(k);
        const unsigned long d = static_cast<unsigned long>(ht::rnd(g, 1, 3));
        // positions spaced apart so multi-index position sums stay distinct
        std::vector<unsigned long> n;
        std::vector<BigInt> z;
        unsigned long p = 1;
        for (int j = ht::rnd(g, 1, 3); j-- > 0;) {
            n.push_back(p);
            p = p * (d + 1) + 1;
            z.emplace_back(ht::rnd(g, 1, 3));
        }
        std::vector<unsigned long> i(n.size());
        unsigned long total = 0;
        for (auto& ij : i) {
            ij = static_cast<unsigned long>(ht::rnd(g, 0, static_cast<long>(d - total)));
            total += ij;
        }
        BigInt expected = multinomial(d, i);
        for (std::size_t j = 0; j < z.size(); ++j)
            for (unsigned long e = 0; e < i[j]; ++e) expected *= z[j];
        if (expected >= base.value()) continue;  // outside the lemma's digit range
        ++done;
        CHECK(digit_of_power(z, n, base, d, i) == expected);
    }

    // colliding positions are rejected rather than silently misread
    CHECK_THROWS_AS(digit_of_power({1, 1}, {1, 2}, b16, 3, {1, 0}), std::domain_error);
    // a product reaching the base cannot be a digit
    CHECK_THROWS_AS(digit_of_power({15}, {1}, b16, 2, {1}), std::domain_error);
    // multi-index heavier than the exponent
    CHECK_THROWS_AS(digit_of_power({2}, {1}, b16, 2, {3}), std::domain_error);
}

TEST_CASE("power-of-two predicate") {
    CHECK(is_power2(1));
    CHECK(is_power2(2));
    CHECK(is_power2(1024));
    CHECK(is_power2(BigInt(1) << 300));
    CHECK_FALSE(is_power2(0));
    CHECK_FALSE(is_power2(1536));
    CHECK_FALSE(is_power2(-2));
    CHECK_FALSE(is_power2(6));
}

}  // TEST_SUITE
