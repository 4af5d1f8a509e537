#pragma once

#include <vector>

#include "rslab/bigint.hpp"

namespace rslab {

struct PrimePower {
    BigInt prime;
    unsigned exponent = 0;

    BigInt value() const { return power(prime, exponent); }
    bool operator==(const PrimePower&) const = default;
};

/// Full factorization of n >= 1, primes ascending. Trial division removes
/// small factors, Pollard-Brent rho splits the cofactor, and compositeness is
/// decided by GMP's Baillie-PSW based test.
std::vector<PrimePower> factorize(const BigInt& n);

}  // namespace rslab
