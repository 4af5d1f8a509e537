#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace rslab {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt to_big(std::uint64_t v) {
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return r;
}

/// Value of a nonnegative BigInt known to fit in 64 bits.
inline std::uint64_t to_u64(const BigInt& v) {
    std::uint64_t out = 0;
    if (sgn(v) == 0) return 0;
    std::size_t count = 0;
    mpz_export(&out, &count, -1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

inline bool fits_u64(const BigInt& v) { return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64; }

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt power(std::uint64_t base, std::uint64_t exp);
BigInt power(const BigInt& base, std::uint64_t exp);
BigInt factorial(std::uint64_t n);

/// Parses a decimal integer; throws Error(Usage) on malformed text.
BigInt parse_bigint(std::string_view text);

/// log2 of a positive integer, accurate to double precision for any size.
double log2_big(const BigInt& v);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// Least nonnegative residue of v modulo m (m > 0).
inline BigInt mod_floor(const BigInt& v, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

using u128 = unsigned __int128;

std::string u128_to_string(u128 v);
BigInt u128_to_big(u128 v);

}  // namespace rslab
