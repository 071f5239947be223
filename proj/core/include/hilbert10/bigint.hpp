#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <cstdlib>
#include <string>

namespace h10 {

// Universal scalar of the library: arbitrary-precision signed integer.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::size_t hash_value(const BigInt& v) {
    const mpz_srcptr z = v.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(z->_mp_size) * 0x9e3779b97f4a7c15ULL;
    const int limbs = std::abs(z->_mp_size);
    for (int i = 0; i < limbs; ++i) {
        h ^= static_cast<std::size_t>(z->_mp_d[i]);
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::size_t bit_length(const BigInt& v) {
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace h10
