#include "rslab/poly_factor.hpp"

#include <algorithm>

#include "rslab/rng.hpp"

namespace rslab {
namespace {

// x^(p^times) mod f
Poly frobenius_power(const Poly& f, std::size_t times) {
    const PrimeField& F = f.field();
    Poly y = Poly::x(F) % f;
    const BigInt p = to_big(F.modulus());
    for (std::size_t i = 0; i < times; ++i) y = powmod(y, p, f);
    return y;
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

Poly random_below_degree(const PrimeField& F, std::size_t n, Rng& rng) {
    std::vector<Residue> c(n);
    for (auto& v : c) v = rng.below(F.modulus());
    return Poly(F, std::move(c));
}

// One nontrivial monic factor of squarefree monic f whose irreducible factors
// all have degree d, where deg f > d (Cantor-Zassenhaus).
Poly equal_degree_factor(const Poly& f, std::size_t d, Rng& rng) {
    const PrimeField& F = f.field();
    const std::size_t n = static_cast<std::size_t>(f.degree());
    const Poly one = Poly::constant(F, 1);
    for (;;) {
        Poly a = random_below_degree(F, n, rng);
        if (a.degree() < 1) continue;
        Poly g = gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) return g;
        Poly b(F);
        if (F.modulus() == 2) {
            // trace from F_{2^d} down to F_2
            Poly term = a % f;
            b = term;
            for (std::size_t i = 1; i < d; ++i) {
                term = (term * term) % f;
                b = b + term;
            }
        } else {
            BigInt e = (power(F.modulus(), d) - 1) / 2;
            b = powmod(a, e, f) - one;
        }
        g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) return g;
    }
}

void split_linear(const Poly& f, Rng& rng, std::vector<Residue>& out) {
    if (f.degree() <= 0) return;
    if (f.degree() == 1) {
        const PrimeField& F = f.field();
        out.push_back(F.neg(F.div(f.coeff(0), f.coeff(1))));
        return;
    }
    Poly g = equal_degree_factor(f, 1, rng);
    split_linear(g, rng, out);
    split_linear(f / g, rng, out);
}

constexpr std::uint64_t kExhaustiveRootLimit = 1024;

}  // namespace

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const Poly m = f.monic();
    const PrimeField& F = m.field();
    const std::size_t n = static_cast<std::size_t>(m.degree());
    const Poly x = Poly::x(F);
    if (!(frobenius_power(m, n) == x % m)) return false;
    for (std::size_t r : prime_divisors(n)) {
        Poly y = frobenius_power(m, n / r);
        if (gcd(y - x, m).degree() != 0) return false;
    }
    return true;
}

std::optional<Poly> nontrivial_factor(const Poly& f) {
    if (f.degree() < 2) return std::nullopt;
    const Poly m = f.monic();
    const PrimeField& F = m.field();
    const std::uint64_t p = F.modulus();
    const Poly d = m.derivative();
    if (d.is_zero()) {
        // m(x) = g(x^p) = g(x)^p over F_p
        std::vector<Residue> g;
        for (std::size_t i = 0; i < m.coeffs().size(); i += p) g.push_back(m.coeffs()[i]);
        return Poly(F, std::move(g)).monic();
    }
    Poly g = gcd(m, d);
    if (g.degree() > 0) return g;
    const Poly x = Poly::x(F);
    const std::size_t n = static_cast<std::size_t>(m.degree());
    Poly y = x % m;
    const BigInt pb = to_big(p);
    for (std::size_t i = 1; 2 * i <= n; ++i) {
        y = powmod(y, pb, m);
        Poly common = gcd(y - x, m);
        if (common.degree() == 0) continue;
        if (common.degree() < m.degree()) return common;
        Rng rng(0x5eed, i);
        return equal_degree_factor(m, i, rng);
    }
    return std::nullopt;
}

Poly random_irreducible(const PrimeField& field, int degree, std::uint64_t seed) {
    if (degree < 1) throw Error(ErrorKind::InvalidArgument, "irreducible degree must be >= 1");
    Rng rng(seed, 0x1ee);
    for (;;) {
        std::vector<Residue> c(static_cast<std::size_t>(degree) + 1);
        for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = rng.below(field.modulus());
        c.back() = 1;
        Poly f(field, std::move(c));
        if (is_irreducible(f)) return f;
    }
}

std::vector<Residue> roots(const Poly& f) {
    if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "roots of the zero polynomial");
    const PrimeField& F = f.field();
    std::vector<Residue> out;
    if (f.degree() == 0) return out;
    if (F.modulus() <= kExhaustiveRootLimit) {
        for (Residue a = 0; a < F.modulus(); ++a)
            if (f.eval(a) == 0) out.push_back(a);
        return out;
    }
    const Poly m = f.monic();
    const Poly x = Poly::x(F);
    Poly g = gcd(powmod(x, to_big(F.modulus()), m) - x, m);
    Rng rng(0x700f, static_cast<std::uint64_t>(g.degree()));
    split_linear(g, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<Residue>> linear_split(const Poly& P) {
    if (P.degree() < 1 || !P.is_monic())
        throw Error(ErrorKind::InvalidArgument, "linear_split expects a monic polynomial of degree >= 1");
    const PrimeField& F = P.field();
    const Poly x = Poly::x(F);
    // P | x^p - x  <=>  P is a product of distinct linear factors
    if (!(powmod(x, to_big(F.modulus()), P) == x % P)) return std::nullopt;
    std::vector<Residue> r = roots(P);
    ensure(r.size() == static_cast<std::size_t>(P.degree()), "split polynomial has deg-many roots");
    return r;
}

}  // namespace rslab
