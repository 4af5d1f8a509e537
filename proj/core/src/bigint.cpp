#include "rslab/bigint.hpp"

#include <algorithm>
#include <cmath>

#include "rslab/error.hpp"

namespace rslab {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    BigInt r;
    if (k > n) return r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt power(std::uint64_t base, std::uint64_t exp) { return power(to_big(base), exp); }

BigInt power(const BigInt& base, std::uint64_t exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt factorial(std::uint64_t n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt parse_bigint(std::string_view text) {
    std::string s(text);
    auto start = s.find_first_not_of(" \t");
    auto stop = s.find_last_not_of(" \t");
    if (start == std::string::npos) throw Error(ErrorKind::Usage, "empty integer literal");
    s = s.substr(start, stop - start + 1);
    std::size_t digits_from = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (digits_from == s.size() ||
        !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(digits_from), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
        throw Error(ErrorKind::Usage, "malformed integer literal '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s, 10);
}

double log2_big(const BigInt& v) {
    if (sgn(v) <= 0) throw Error(ErrorKind::InvalidArgument, "log2 of a non-positive integer");
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log2(mant) + static_cast<double>(exp);
}

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

BigInt u128_to_big(u128 v) {
    BigInt hi = to_big(static_cast<std::uint64_t>(v >> 64));
    BigInt lo = to_big(static_cast<std::uint64_t>(v));
    return (hi << 64) + lo;
}

}  // namespace rslab
