#include "rslab/modular.hpp"

#include <algorithm>

#include "rslab/error.hpp"

namespace rslab {

namespace {

unsigned valuation(const BigInt& x, const BigInt& p, unsigned cap) {
    if (sgn(x) == 0) return cap;
    unsigned v = 0;
    BigInt t = x;
    while (v < cap && mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
        t /= p;
        ++v;
    }
    return v;
}

BigInt invert(const BigInt& u, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t()) == 0) throw Error(ErrorKind::Internal, "unit expected");
    return r;
}

// x = a (mod m) combined with x = b (mod n), coprime moduli
BigInt crt_pair(const BigInt& a, const BigInt& m, const BigInt& b, const BigInt& n) {
    if (m == 1) return mod_floor(b, n);
    const BigInt t = mod_floor((b - a) * invert(mod_floor(m, n), n), n);
    return a + m * t;
}

}  // namespace

void ModLinearSystem::add_row(std::vector<BigInt> coeffs, BigInt value) {
    if (coeffs.size() != unknowns) throw Error(ErrorKind::InvalidArgument, "row length does not match unknowns");
    rows.push_back(std::move(coeffs));
    rhs.push_back(std::move(value));
}

LocalSmith local_smith(const ModLinearSystem& system, const PrimePower& pp) {
    const std::size_t r = system.rows.size(), c = system.unknowns;
    const unsigned e = pp.exponent;
    LocalSmith out;
    out.prime = pp.prime;
    out.exponent = e;
    out.modulus = pp.value();
    const BigInt& pe = out.modulus;

    std::vector<std::vector<BigInt>> M(r, std::vector<BigInt>(c));
    std::vector<BigInt> b(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) M[i][j] = mod_floor(system.rows[i][j], pe);
        b[i] = mod_floor(system.rhs[i], pe);
    }
    out.V.assign(c, std::vector<BigInt>(c, 0));
    for (std::size_t j = 0; j < c; ++j) out.V[j][j] = 1;
    out.valuation.assign(c, e);
    std::vector<BigInt> unit_inv;

    std::size_t rank = 0;
    for (std::size_t s = 0; s < std::min(r, c); ++s) {
        unsigned best = e;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = s; i < r && best > 0; ++i)
            for (std::size_t j = s; j < c; ++j) {
                const unsigned v = valuation(M[i][j], pp.prime, e);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                    if (v == 0) break;
                }
            }
        if (best == e) break;
        std::swap(M[s], M[bi]);
        std::swap(b[s], b[bi]);
        if (bj != s) {
            for (auto& row : M) std::swap(row[s], row[bj]);
            for (auto& row : out.V) std::swap(row[s], row[bj]);
        }
        const BigInt pv = power(pp.prime, best);
        const BigInt uinv = invert(M[s][s] / pv, pe);
        for (std::size_t i = s + 1; i < r; ++i) {
            if (sgn(M[i][s]) == 0) continue;
            const BigInt f = mod_floor((M[i][s] / pv) * uinv, pe);
            for (std::size_t j = s; j < c; ++j) M[i][j] = mod_floor(M[i][j] - f * M[s][j], pe);
            b[i] = mod_floor(b[i] - f * b[s], pe);
        }
        for (std::size_t j = s + 1; j < c; ++j) {
            if (sgn(M[s][j]) == 0) continue;
            const BigInt f = mod_floor((M[s][j] / pv) * uinv, pe);
            M[s][j] = 0;
            for (std::size_t k = 0; k < c; ++k) out.V[k][j] = mod_floor(out.V[k][j] - f * out.V[k][s], pe);
        }
        out.diagonal.push_back(M[s][s]);
        out.valuation[s] = best;
        unit_inv.push_back(uinv);
        ++rank;
    }

    out.y.assign(c, 0);
    for (std::size_t s = 0; s < rank; ++s) {
        const unsigned v = out.valuation[s];
        if (valuation(b[s], pp.prime, e) < v) {
            out.consistent = false;
            continue;
        }
        const BigInt pv = power(pp.prime, v);
        out.y[s] = mod_floor((b[s] / pv) * unit_inv[s], power(pp.prime, e - v));
    }
    for (std::size_t i = rank; i < r; ++i)
        if (sgn(b[i]) != 0) out.consistent = false;
    return out;
}

std::optional<BigInt> ModSolution::functional(const std::vector<BigInt>& c) const {
    if (!consistent_) return std::nullopt;
    BigInt acc = 0, mod = 1;
    for (const auto& L : local_) {
        const std::size_t n = c.size();
        BigInt value = 0;
        for (std::size_t i = 0; i < n; ++i) {
            BigInt w = 0;
            for (std::size_t j = 0; j < n; ++j) w += c[j] * L.V[j][i];
            w = mod_floor(w, L.modulus);
            if (valuation(w, L.prime, L.exponent) < L.valuation[i]) return std::nullopt;
            value += w * L.y[i];
        }
        acc = crt_pair(acc, mod, mod_floor(value, L.modulus), L.modulus);
        mod *= L.modulus;
    }
    return mod_floor(acc, modulus_);
}

ModSolution solve_mod(const ModLinearSystem& system) {
    if (system.modulus < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
    if (system.rows.size() != system.rhs.size()) throw Error(ErrorKind::InvalidArgument, "rows and rhs differ in length");
    for (const auto& row : system.rows)
        if (row.size() != system.unknowns) throw Error(ErrorKind::InvalidArgument, "row length does not match unknowns");
    ModSolution sol;
    sol.modulus_ = system.modulus;
    const std::size_t c = system.unknowns;
    sol.particular_.assign(c, 0);
    std::vector<BigInt> mods(c, 1);
    const bool trivial = system.modulus == 1;
    for (const PrimePower& pp : trivial ? std::vector<PrimePower>{} : factorize(system.modulus)) {
        LocalSmith L = local_smith(system, pp);
        if (!L.consistent) sol.consistent_ = false;
        for (unsigned v : L.valuation)
            if (v != 0) sol.unique_ = false;
        for (std::size_t j = 0; j < c; ++j) {
            BigInt xj = 0;
            for (std::size_t i = 0; i < c; ++i) xj += L.V[j][i] * L.y[i];
            sol.particular_[j] = crt_pair(sol.particular_[j], mods[j], mod_floor(xj, L.modulus), L.modulus);
            mods[j] *= L.modulus;
        }
        sol.local_.push_back(std::move(L));
    }
    for (auto& x : sol.particular_) x = mod_floor(x, system.modulus);
    return sol;
}

RankTracker::RankTracker(const BigInt& modulus, std::size_t unknowns)
    : unknowns_(unknowns), primes_(modulus > 1 ? factorize(modulus) : std::vector<PrimePower>{}) {
    basis_.assign(primes_.size(), std::vector<std::optional<std::vector<BigInt>>>(unknowns));
    rank_.assign(primes_.size(), 0);
}

bool RankTracker::add_row(const std::vector<BigInt>& coeffs) {
    if (coeffs.size() != unknowns_) throw Error(ErrorKind::InvalidArgument, "row length does not match unknowns");
    bool grew = false;
    for (std::size_t k = 0; k < primes_.size(); ++k) {
        if (rank_[k] == unknowns_) continue;
        const BigInt& p = primes_[k].prime;
        std::vector<BigInt> v(unknowns_);
        for (std::size_t j = 0; j < unknowns_; ++j) v[j] = mod_floor(coeffs[j], p);
        for (std::size_t j = 0; j < unknowns_; ++j) {
            if (sgn(v[j]) == 0) continue;
            auto& piv = basis_[k][j];
            if (piv) {
                const BigInt f = v[j];
                for (std::size_t t = j; t < unknowns_; ++t) v[t] = mod_floor(v[t] - f * (*piv)[t], p);
            } else {
                const BigInt inv = invert(v[j], p);
                for (std::size_t t = j; t < unknowns_; ++t) v[t] = mod_floor(v[t] * inv, p);
                piv = std::move(v);
                ++rank_[k];
                grew = true;
                break;
            }
        }
    }
    return grew;
}

bool RankTracker::full() const noexcept {
    return std::all_of(rank_.begin(), rank_.end(), [&](std::size_t r) { return r == unknowns_; });
}

std::vector<std::size_t> RankTracker::ranks() const { return rank_; }

}  // namespace rslab
