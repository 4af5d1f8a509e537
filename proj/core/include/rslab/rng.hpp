#pragma once

#include <cstdint>
#include <random>

#include "rslab/bigint.hpp"

namespace rslab {

/// Seeded generator with bit-exact output across platforms: mt19937_64 is
/// fully specified by the standard, and bounded draws use our own rejection
/// sampling instead of the implementation-defined distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
        engine_.seed(seq);
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        if ((bound & (bound - 1)) == 0) return next() & (bound - 1);
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        for (;;) {
            std::uint64_t v = next();
            if (v < limit) return v % bound;
        }
    }

    /// Uniform in [0, bound); bound > 0.
    BigInt below(const BigInt& bound) {
        if (fits_u64(bound)) return to_big(below(to_u64(bound)));
        const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
        for (;;) {
            BigInt v = 0;
            std::size_t have = 0;
            while (have < bits) {
                v = (v << 64) + to_big(next());
                have += 64;
            }
            v >>= static_cast<mp_bitcnt_t>(have - bits);
            if (v < bound) return v;
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace rslab
