#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rslab/ext_field.hpp"
#include "rslab/rs_code.hpp"

namespace rslab {

/// A decoding instance derived from a target element f(alpha) of F_{q^h}:
/// the code [n, g-h]_q on S, radius n - g, and the received word
/// (-f(a)/h(a) - a^(g-h))_{a in S}.
class InstanceSpec {
public:
    /// Requires S distinct, h < g <= |S|; f is reduced modulo h(x).
    InstanceSpec(ExtField field, std::vector<Residue> S, std::size_t g, const Poly& f);
    InstanceSpec(ExtField field, std::vector<Residue> S, std::size_t g, const ExtElem& f);

    const ExtField& field() const noexcept { return field_; }
    const std::vector<Residue>& S() const noexcept { return S_; }
    std::size_t g() const noexcept { return g_; }
    /// The degree < h representative of the target.
    const Poly& f() const noexcept { return f_; }
    std::size_t n() const noexcept { return S_.size(); }
    std::size_t k() const noexcept { return g_ - field_.degree(); }
    std::size_t radius() const noexcept { return n() - g_; }
    RSParams code() const { return RSParams(field_.base(), S_, k()); }

private:
    ExtField field_;
    std::vector<Residue> S_;
    std::size_t g_;
    Poly f_;
};

/// prod_{a in A} (alpha - a), i.e. P_A(x) mod h(x).
ExtElem psi_map(const ExtField& field, std::span<const Residue> A);

Word build_received_word(const InstanceSpec& spec);

/// For a decoder output m (deg m < g-h): t = m + x^(g-h), P = f + t*h, and
/// the set A with P = prod_{a in A}(x - a) when P splits into distinct linear
/// factors with all roots in S. Absent otherwise.
std::optional<std::vector<Residue>> subset_from_codeword(const InstanceSpec& spec, const Poly& m);

/// A multiplicative relation b^i = prod_{a in A} (alpha - a).
struct Relation {
    BigInt i;
    std::vector<Residue> A;  // ascending
    bool operator==(const Relation&) const = default;
};

/// subset_from_codeword followed by the check b^i = psi(A), which must hold
/// when spec.f() = b^i. Throws Internal when a split set fails that check.
std::optional<Relation> relation_from_codeword(const InstanceSpec& spec, const Poly& m, const ExtElem& base,
                                               const BigInt& i);

/// Counts keyed by element index (see ExtField::index_of). In census mode
/// the counts are exact and add up to C(|S|, g); in sample mode they are hit
/// counts out of `samples` uniformly drawn subsets.
struct CountTable {
    ExtField field;
    std::map<std::uint64_t, BigInt> counts;
    bool exact = true;
    std::uint64_t samples = 0;

    BigInt at(const ExtElem& e) const;
    BigInt total() const;
};

struct CensusOptions {
    std::uint64_t guard = 10'000'000;
    unsigned threads = 1;
};

/// Exact |psi^{-1}(f)| for every f, by enumerating all g-subsets of S.
CountTable psi_census(const ExtField& field, const std::vector<Residue>& S, std::size_t g,
                      const CensusOptions& options = {});

/// Tallies psi over `samples` uniform random g-subsets of S.
CountTable psi_sample(const ExtField& field, const std::vector<Residue>& S, std::size_t g, std::uint64_t samples,
                      std::uint64_t seed);

}  // namespace rslab
