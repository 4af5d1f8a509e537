#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rslab/ext_field.hpp"
#include "rslab/modular.hpp"
#include "rslab/reduction.hpp"
#include "rslab/rs_code.hpp"

namespace rslab {

/// Smallest e >= 0 with b^e = t, or nullopt when t is not in <b>. Throws
/// Guard when the group order exceeds `guard`.
std::optional<BigInt> bsgs_dlog(const ExtElem& b, const ExtElem& t, std::uint64_t guard = 10'000'000'000ull);
std::optional<std::uint64_t> bsgs_dlog(const PrimeField& field, Residue b, Residue t,
                                       std::uint64_t guard = 10'000'000'000ull);

enum class Variant { ListDecode, BoundedDistance };
enum class Decoder { BruteForce, Sudan, BW };

std::string_view to_string(Variant v) noexcept;
std::string_view to_string(Decoder d) noexcept;
/// "list" / "bdd"; throws Usage otherwise.
Variant parse_variant(std::string_view text);
/// "brute" / "sudan" / "bw"; throws Usage otherwise.
Decoder parse_decoder(std::string_view text);

struct DlogConfig {
    ExtField field;
    std::vector<Residue> S;
    std::size_t g = 0;
    Variant variant = Variant::ListDecode;
    Decoder decoder = Decoder::BruteForce;
    ExtElem base;
    ExtElem target;
    std::uint64_t seed = 1;
    /// Budget for relation collection and, separately, for target extraction.
    std::uint64_t max_trials = 10'000;
    /// Stop collecting after this many new rows without rank growth; 0 means 2|S|.
    std::uint64_t stall_window = 0;
    unsigned threads = 1;
    BruteForceOptions brute{};
    SudanOptions sudan{};
};

/// Checks the variant and decoder rules and that the base is primitive.
void validate(const DlogConfig& cfg);

/// Decoder outputs for one received word, honouring the variant (the
/// bounded-distance variant keeps only the first codeword).
std::vector<Poly> run_decoder(const DlogConfig& cfg, const InstanceSpec& spec);

/// Relations b^i = prod (alpha - a) obtained from the decoding instance for b^i.
std::vector<Relation> relations_for_exponent(const DlogConfig& cfg, const BigInt& i);

/// Distinct relations over the factor base {alpha - a : a in unknowns}.
struct RelationSystem {
    BigInt N;
    std::vector<Residue> unknowns;
    std::vector<Relation> rows;

    ModLinearSystem linear() const;
};

struct CollectionState {
    RelationSystem system;
    std::uint64_t trials_done = 0;
    std::uint64_t hits = 0;  // trials that produced at least one relation
    std::vector<BigInt> trial_exponents;
    /// "determined", "stalled", "exhausted" (every g-subset seen), "max_trials", or "" while running.
    std::string stop_reason;
    std::vector<std::size_t> ranks;  // rank modulo each prime of N
    bool determined = false;
};

/// Draws i uniformly from [0, N) and accumulates verified relations until
/// the system is determined, stalls, or the trial budget runs out. With
/// `resume`, continues a previously saved state under the same seed stream.
CollectionState collect_relations(const DlogConfig& cfg, std::optional<CollectionState> resume = std::nullopt);

struct LogTable {
    std::map<Residue, BigInt> logs;  // a -> log_b(alpha - a)
    bool verified = false;
};

/// The unique solution of the relation system, verified by exponentiation;
/// nullopt when the logs are not uniquely determined mod N.
std::optional<LogTable> solve_log_system(const DlogConfig& cfg, const RelationSystem& system);

struct Extraction {
    BigInt exponent;
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
    std::string path;  // "table" or "dependence"
};

/// Draws j until t b^j decomposes over the factor base, then returns
/// sum L_a - j. Requires logs.verified.
Extraction extract_target_log(const DlogConfig& cfg, const LogTable& logs);

/// Fallback when the logs are not all determined: adds rows
/// sum_{a in A'} L_a - L_t = j for decompositions t b^j = psi(A') until L_t
/// is fixed by the combined system.
Extraction extract_by_dependence(const DlogConfig& cfg, const RelationSystem& system);

struct DlogReport {
    CollectionState collection;
    bool table_unique = false;
    Extraction extraction;
    bool verified = false;
};

/// collect_relations, then solve_log_system and extract_target_log, or the
/// dependence route when the table is not unique. The exponent is always
/// re-verified. Throws Computation when a trial budget runs out.
DlogReport dlog_via_rs(const DlogConfig& cfg, std::optional<CollectionState> resume = std::nullopt);

/// JSON persistence of a collection state, tied to its configuration.
std::string save_relations(const DlogConfig& cfg, const CollectionState& state);
/// Parses a saved state, checking that it matches cfg and re-verifying each row.
CollectionState load_relations(const DlogConfig& cfg, std::string_view text);

}  // namespace rslab
