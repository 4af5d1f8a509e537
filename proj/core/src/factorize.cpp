#include "rslab/factorize.hpp"

#include <algorithm>
#include <map>

#include "rslab/error.hpp"

namespace rslab {
namespace {

bool probably_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

BigInt brent_rho(const BigInt& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2, x, ys, g = 1, q = 1;
        const unsigned long m = 128;
        unsigned long r = 1;
        auto f = [&](const BigInt& v) { return mod_floor(v * v + c, n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    BigInt diff = x - y;
                    q = mod_floor(q * abs(diff), n);
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                BigInt diff = x - ys;
                BigInt a = abs(diff);
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(const BigInt& n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (probably_prime(n)) {
        ++out[n];
        return;
    }
    BigInt d = brent_rho(n);
    split(d, out);
    split(BigInt(n / d), out);
}

}  // namespace

std::vector<PrimePower> factorize(const BigInt& n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "factorize expects a positive integer");
    std::map<BigInt, unsigned> found;
    BigInt rest = n;
    for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
        if (rest == 1) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            ++found[BigInt(p)];
            rest /= p;
        }
    }
    split(rest, found);
    std::vector<PrimePower> out;
    for (const auto& [prime, e] : found) out.push_back({prime, e});
    return out;
}

}  // namespace rslab
