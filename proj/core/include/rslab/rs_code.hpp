#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rslab/poly.hpp"

namespace rslab {

/// An [n, k]_q Reed-Solomon code: messages are polynomials of degree < k,
/// evaluated on the ordered evaluation set S of n distinct points.
class RSParams {
public:
    RSParams(const PrimeField& field, std::vector<Residue> points, std::size_t k);
    /// S = F_q in ascending order.
    static RSParams full(const PrimeField& field, std::size_t k);

    const PrimeField& field() const noexcept { return field_; }
    const std::vector<Residue>& points() const noexcept { return points_; }
    std::size_t n() const noexcept { return points_.size(); }
    std::size_t k() const noexcept { return k_; }
    std::size_t min_distance() const noexcept { return n() - k_ + 1; }
    /// floor((n - k) / 2)
    std::size_t unique_radius() const noexcept { return (n() - k_) / 2; }

private:
    PrimeField field_;
    std::vector<Residue> points_;
    std::size_t k_;
};

/// Length-n word aligned with the code's evaluation set.
using Word = std::vector<Residue>;

void check_word(const RSParams& params, const Word& w);
std::size_t hamming_distance(const Word& a, const Word& b);

Word rs_encode(const RSParams& params, const Poly& message);

/// Berlekamp-Welch: the unique message within floor((n-k)/2) of r, if any.
std::optional<Poly> bw_decode(const RSParams& params, const Word& r);

struct BruteForceOptions {
    /// Upper bound on enumerated candidates (messages or k-subsets).
    std::uint64_t guard = 100'000'000;
    unsigned threads = 1;
};

/// Exactly the messages within `radius` of r, in canonical (lex) order.
///
/// Enumerates all q^k messages, or, when the agreement n - radius is at least
/// k and C(n, k) is smaller, every k-subset of positions (any message within
/// the radius agrees with r on at least k positions and is fixed by them).
/// Throws Guard when the cheaper enumeration still exceeds options.guard.
std::vector<Poly> list_decode_bruteforce(const RSParams& params, const Word& r, std::size_t radius,
                                         const BruteForceOptions& options = {});

/// Smallest agreement that the multiplicity-1 Sudan decoder is guaranteed to
/// recover: D + 1, where D is the least (1, k-1)-weighted degree for which the
/// interpolation space has more than n monomials.
std::size_t sudan_agreement_bound(std::size_t n, std::size_t k);

struct SudanOptions {
    /// Run even when n - radius is below the completeness bound. The output is
    /// then a verified subset of the true list rather than an error.
    bool allow_incomplete = false;
};

/// Sudan's list decoder (interpolation multiplicity 1) with Roth-Ruckenstein
/// y-root extraction. Every returned message is verified by substitution and
/// by distance. Throws InvalidArgument when n - radius <
/// sudan_agreement_bound(n, k) unless options.allow_incomplete is set.
std::vector<Poly> sudan_list_decode(const RSParams& params, const Word& r, std::size_t radius,
                                    const SudanOptions& options = {});

}  // namespace rslab
