#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rslab/bigint.hpp"
#include "rslab/factorize.hpp"

namespace rslab {

/// The linear system rows * x = rhs over Z/NZ.
struct ModLinearSystem {
    BigInt modulus;
    std::size_t unknowns = 0;
    std::vector<std::vector<BigInt>> rows;
    std::vector<BigInt> rhs;

    void add_row(std::vector<BigInt> coeffs, BigInt value);
};

/// Smith form of the system modulo one prime power p^e: U A V = D with U, V
/// invertible mod p^e and D diagonal with nondecreasing p-adic valuations.
struct LocalSmith {
    BigInt prime;
    unsigned exponent = 0;
    BigInt modulus;                        // p^e
    std::vector<std::vector<BigInt>> V;    // unknowns x unknowns
    std::vector<BigInt> diagonal;          // d_0 .. d_{r-1}, nonzero mod p^e
    std::vector<unsigned> valuation;       // per unknown; e where no pivot exists
    std::vector<BigInt> y;                 // solution of D y = U b with free coordinates 0
    bool consistent = true;
};

LocalSmith local_smith(const ModLinearSystem& system, const PrimePower& pp);

/// Complete description of the solution set of a ModLinearSystem.
class ModSolution {
public:
    bool consistent() const noexcept { return consistent_; }
    bool unique() const noexcept { return consistent_ && unique_; }
    /// Some solution (all free coordinates set to zero); requires consistent().
    const std::vector<BigInt>& particular() const { return particular_; }
    /// The value of c . x when every solution gives the same value.
    std::optional<BigInt> functional(const std::vector<BigInt>& c) const;
    const std::vector<LocalSmith>& components() const noexcept { return local_; }

private:
    friend ModSolution solve_mod(const ModLinearSystem& system);

    BigInt modulus_;
    std::vector<LocalSmith> local_;
    std::vector<BigInt> particular_;
    bool consistent_ = true;
    bool unique_ = true;
};

/// Solves over Z/NZ by CRT over the prime-power factors of N.
ModSolution solve_mod(const ModLinearSystem& system);

/// Tracks the rank of a growing 0/1-or-integer row set modulo every prime
/// dividing N; the solution is unique mod N exactly when every rank is full.
class RankTracker {
public:
    RankTracker(const BigInt& modulus, std::size_t unknowns);

    /// Returns true when the row raised the rank modulo at least one prime.
    bool add_row(const std::vector<BigInt>& coeffs);
    bool full() const noexcept;
    std::vector<std::size_t> ranks() const;
    const std::vector<PrimePower>& primes() const noexcept { return primes_; }

private:
    std::size_t unknowns_;
    std::vector<PrimePower> primes_;
    // per prime: reduced rows keyed by pivot column
    std::vector<std::vector<std::optional<std::vector<BigInt>>>> basis_;
    std::vector<std::size_t> rank_;
};

}  // namespace rslab
