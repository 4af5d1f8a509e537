#include "rslab/prime_field.hpp"

namespace rslab {

bool is_small_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2u, 3u, 5u}) {
        if (n % d == 0) return n == d;
    }
    for (std::uint64_t d = 7; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 4) == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 32))
        throw Error(ErrorKind::InvalidArgument, "prime modulus " + std::to_string(p) + " exceeds 2^32");
    if (!is_small_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
}

Residue PrimeField::inv(Residue a) const {
    if (a % p_ == 0) throw Error(ErrorKind::Domain, "division by zero in F_" + std::to_string(p_));
    // extended Euclid on (a, p)
    std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = static_cast<std::int64_t>(a % p_);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        std::int64_t s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    return reduce(s0);
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
    Residue result = 1 % p_, base = a % p_;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Residue PrimeField::pow(Residue a, const BigInt& e) const {
    if (sgn(e) < 0) return pow(inv(a), BigInt(-e));
    if (fits_u64(e)) return pow(a, to_u64(e));
    // reduce the exponent by Fermat when a is a unit
    if (a % p_ == 0) return 0;
    BigInt r = mod_floor(e, to_big(p_ - 1));
    return pow(a, to_u64(r));
}

}  // namespace rslab
