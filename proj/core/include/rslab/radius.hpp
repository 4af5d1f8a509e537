#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "rslab/bigint.hpp"

namespace rslab {

enum class JhCmp { LT1, EQ1, GT1 };

/// Documented accuracy of jh_log2: outside this band its sign always agrees
/// with jh_exact_cmp.
inline constexpr double kJhLog2Margin = 1e-6;

/// log2( C(n,g) / q^(g-k) ), the log of the guaranteed ball population.
/// Requires k <= g <= n and q >= 2.
double jh_log2(std::uint64_t n, std::uint64_t k, std::uint64_t g, std::uint64_t q);

/// Exact comparison of C(n,g) against q^(g-k).
JhCmp jh_exact_cmp(std::uint64_t n, std::uint64_t k, std::uint64_t g, std::uint64_t q);

struct GhatResult {
    std::uint64_t n, k, q;
    std::uint64_t ghat;
    Rational ratio_at_ghat;  // C(n, ghat) / q^(ghat-k)
    Rational ratio_below;    // C(n, ghat-1) / q^(ghat-1-k)
};

/// Smallest g with C(n,g) < q^(g-k). Requires 1 <= k < n and q >= n >= 2.
GhatResult ghat(std::uint64_t n, std::uint64_t k, std::uint64_t q);

struct Lemma1Solution {
    std::uint64_t n, g, h;
    auto operator<=>(const Lemma1Solution&) const = default;
};

struct Lemma1Options {
    std::uint64_t h_max = 88;     // exclusive
    std::uint64_t n_max = 15664;  // exclusive
    std::int64_t c = 0;
    unsigned threads = 1;
};

struct Lemma1Report {
    std::vector<Lemma1Solution> solutions;  // lexicographic (n, g, h)
    std::uint64_t triples_scanned = 0;      // triples satisfying g^2 > n(g-h) inside the box
    std::uint64_t exact_checks = 0;         // comparisons settled with big integers
    std::uint64_t cap_truncated = 0;        // (h, g) pairs whose n-range was cut by n_max
    /// Triple maximizing log2 C(n,g) - (h-c) log2 n among scanned ones.
    Lemma1Solution closest{0, 0, 0};
    double closest_log2_margin = 0;
    /// Same maximum restricted to triples on the n_max - 1 boundary.
    double boundary_log2_margin = 0;
};

/// Scans h < h_max, h < g < n < n_max for triples with g^2 > n(g-h) and
/// C(n,g) > n^h (c = 0) or C(n,g) >= n^(h-c) (c != 0). Candidates are
/// screened with log-gamma and settled exactly whenever the float margin
/// is inconclusive.
Lemma1Report lemma1_search(const Lemma1Options& options = {});

/// (1/n) log2( C(n,g) / n^(g-k) ) with g = round(k + c1 (n-k)), evaluated
/// from exact integers. Requires 0 < c1 < 1/2 and k < g < n.
double lemma1_part2_probe(std::uint64_t n, std::uint64_t k, double c1);

}  // namespace rslab
