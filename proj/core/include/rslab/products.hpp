#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rslab/ext_field.hpp"
#include "rslab/reduction.hpp"

namespace rslab {

/// N_k(beta) for every beta in F_{q^h}^*, stored by discrete log: counts[e]
/// is the number of k-subsets A of F_q with prod (alpha - a) = gamma^e.
struct NkCounts {
    ExtField field;
    std::size_t k = 0;
    ExtElem generator;                        // gamma
    std::vector<std::uint64_t> element_index; // index of gamma^e
    std::vector<u128> counts;

    u128 min() const;
    u128 max() const;
    BigInt total() const;
    CountTable table() const;
};

struct NkOptions {
    /// Bound on q * k * q^h elementary table updates.
    std::uint64_t guard = 1'000'000'000;
};

/// Subset counting by dynamic programming over F_q. Group elements are
/// indexed by their logarithm, so multiplying by alpha - a is a rotation.
NkCounts nk_count_dense(const ExtField& field, std::size_t k, const NkOptions& options = {});

/// Same counts keyed by element index, with an entry for every nonzero beta.
CountTable nk_count_all(const ExtField& field, std::size_t k, const NkOptions& options = {});

struct WeilReport {
    std::uint64_t q = 0, h = 0, k = 0;
    Rational lower_bound;
    /// True when q^(k/2) entered the bound exactly (k even); for odd k it is
    /// replaced by the upper bound ceil(sqrt(q^k)).
    bool exact_root = true;
    bool cond_a = false;  // q > k(k-1) + 1
    bool cond_b = false;  // q^(k/2 - 1 - h) > (h-1)^k
    bool sufficient = false;  // q >= (h+2)^4 and k = 4h+4
};

/// (q^k - C(k,2) q^(k-1)) / (q^h - 1) - (1 + C(k,2)) (h-1)^k q^(k/2), exactly.
/// Requires q prime, h >= 1, k >= 1.
WeilReport weil_lower_bound(std::uint64_t q, std::uint64_t h, std::uint64_t k);

struct Theorem3Report {
    std::size_t k = 0;
    u128 min_subsets = 0;
    u128 max_subsets = 0;
    BigInt min_ordered;  // k! * min_subsets
    BigInt total;
    WeilReport weil;
    bool min_positive = false;   // every beta is a product of k distinct factors
    bool bound_holds = false;    // every ordered count >= lower_bound
};

/// Runs nk_count_dense at k = 4h+4 and compares with the Weil bound.
Theorem3Report theorem3_verify(const ExtField& field, const NkOptions& options = {});

enum class GroupOrderMethod { Closure, DlogGcd };

struct GroupOrderResult {
    BigInt order;
    GroupOrderMethod method;
};

struct GroupOrderOptions {
    std::uint64_t guard = 1'000'000;  // bound on q^h
};

/// Order of the subgroup generated by {alpha - a : a in S} in F_{q^h}^*.
GroupOrderResult group_order(const ExtField& field, const std::vector<Residue>& S, GroupOrderMethod method,
                             const GroupOrderOptions& options = {});

std::string to_string(GroupOrderMethod m);

}  // namespace rslab
