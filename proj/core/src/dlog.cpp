#include "rslab/dlog.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "rslab/error.hpp"
#include "rslab/parallel.hpp"
#include "rslab/rng.hpp"

namespace rslab {

namespace {

std::uint64_t ceil_sqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r < n) ++r;
    while (r > 0 && (r - 1) * (r - 1) >= n) --r;
    return std::max<std::uint64_t>(r, 1);
}

std::vector<BigInt> incidence(const std::vector<Residue>& unknowns, const std::vector<Residue>& A, std::size_t extra = 0) {
    std::vector<BigInt> row(unknowns.size() + extra, 0);
    for (Residue a : A) {
        auto it = std::find(unknowns.begin(), unknowns.end(), a);
        ensure(it != unknowns.end(), "relation element lies in the factor base");
        row[static_cast<std::size_t>(it - unknowns.begin())] = 1;
    }
    return row;
}

// g-subsets A of S with psi(A) = f, as found by the configured decoder
std::vector<std::vector<Residue>> decompositions(const DlogConfig& cfg, const ExtElem& f) {
    InstanceSpec spec(cfg.field, cfg.S, cfg.g, f);
    std::vector<std::vector<Residue>> out;
    for (const Poly& m : run_decoder(cfg, spec)) {
        auto A = subset_from_codeword(spec, m);
        if (A) {
            ensure(psi_map(cfg.field, *A) == f, "decomposition reproduces its target");
            out.push_back(std::move(*A));
        }
    }
    return out;
}

}  // namespace

std::optional<BigInt> bsgs_dlog(const ExtElem& b, const ExtElem& t, std::uint64_t guard) {
    const ExtField& K = b.field();
    if (!(t.field() == K)) throw Error(ErrorKind::InvalidArgument, "base and target lie in different fields");
    if (b.is_zero() || t.is_zero()) throw Error(ErrorKind::InvalidArgument, "discrete log of or to zero");
    if (K.order() > to_big(guard))
        throw Error(ErrorKind::Guard, "group order " + to_string(K.order()) + " exceeds the baby-step guard");
    const std::uint64_t N = to_u64(K.order());
    const std::uint64_t m = ceil_sqrt(N);
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(m * 2);
    ExtElem cur = K.one();
    for (std::uint64_t j = 0; j < m; ++j) {
        baby.emplace(K.index_of(cur), j);
        cur *= b;
    }
    const ExtElem giant = b.inverse().pow(to_big(m));
    ExtElem gamma = t;
    for (std::uint64_t i = 0; i <= m; ++i) {
        auto it = baby.find(K.index_of(gamma));
        if (it != baby.end()) return to_big(i * m + it->second);
        gamma *= giant;
    }
    return std::nullopt;
}

std::optional<std::uint64_t> bsgs_dlog(const PrimeField& F, Residue b, Residue t, std::uint64_t guard) {
    b = F.reduce(b);
    t = F.reduce(t);
    if (b == 0 || t == 0) throw Error(ErrorKind::InvalidArgument, "discrete log of or to zero");
    const std::uint64_t N = F.modulus() - 1;
    if (N > guard) throw Error(ErrorKind::Guard, "group order exceeds the baby-step guard");
    const std::uint64_t m = ceil_sqrt(N);
    std::unordered_map<Residue, std::uint64_t> baby;
    Residue cur = 1;
    for (std::uint64_t j = 0; j < m; ++j) {
        baby.emplace(cur, j);
        cur = F.mul(cur, b);
    }
    const Residue giant = F.pow(F.inv(b), m);
    Residue gamma = t;
    for (std::uint64_t i = 0; i <= m; ++i) {
        auto it = baby.find(gamma);
        if (it != baby.end()) return i * m + it->second;
        gamma = F.mul(gamma, giant);
    }
    return std::nullopt;
}

std::string_view to_string(Variant v) noexcept { return v == Variant::ListDecode ? "list" : "bdd"; }

std::string_view to_string(Decoder d) noexcept {
    switch (d) {
        case Decoder::BruteForce: return "brute";
        case Decoder::Sudan: return "sudan";
        case Decoder::BW: return "bw";
    }
    return "brute";
}

Variant parse_variant(std::string_view text) {
    if (text == "list") return Variant::ListDecode;
    if (text == "bdd") return Variant::BoundedDistance;
    throw Error(ErrorKind::Usage, "unknown variant '" + std::string(text) + "' (expected list or bdd)");
}

Decoder parse_decoder(std::string_view text) {
    if (text == "brute") return Decoder::BruteForce;
    if (text == "sudan") return Decoder::Sudan;
    if (text == "bw") return Decoder::BW;
    throw Error(ErrorKind::Usage, "unknown decoder '" + std::string(text) + "' (expected brute, sudan or bw)");
}

void validate(const DlogConfig& cfg) {
    const ExtField& K = cfg.field;
    if (!(cfg.base.field() == K) || !(cfg.target.field() == K))
        throw Error(ErrorKind::InvalidArgument, "base and target must lie in the configured field");
    if (cfg.target.is_zero()) throw Error(ErrorKind::InvalidArgument, "target must be nonzero");
    if (cfg.base.is_zero() || !is_primitive(cfg.base))
        throw Error(ErrorKind::InvalidArgument, "base " + to_text(cfg.base) + " is not primitive");
    InstanceSpec probe(K, cfg.S, cfg.g, K.one());
    const std::size_t n = probe.n(), k = probe.k(), h = K.degree();
    if (cfg.variant == Variant::BoundedDistance) {
        if (n != K.q()) throw Error(ErrorKind::InvalidArgument, "bounded-distance variant needs S = F_q");
        if (cfg.g != 4 * h + 4)
            throw Error(ErrorKind::InvalidArgument, "bounded-distance variant needs g = 4h+4 = " + std::to_string(4 * h + 4));
    }
    if (cfg.decoder == Decoder::BW && probe.radius() > (n - k) / 2)
        throw Error(ErrorKind::InvalidArgument, "Berlekamp-Welch needs radius n-g = " + std::to_string(probe.radius()) +
                                                    " within the unique radius " + std::to_string((n - k) / 2));
    if (cfg.decoder == Decoder::Sudan && !cfg.sudan.allow_incomplete && cfg.g < sudan_agreement_bound(n, k))
        throw Error(ErrorKind::InvalidArgument, "Sudan decoding needs agreement g >= " +
                                                    std::to_string(sudan_agreement_bound(n, k)));
}

std::vector<Poly> run_decoder(const DlogConfig& cfg, const InstanceSpec& spec) {
    const RSParams code = spec.code();
    const Word r = build_received_word(spec);
    std::vector<Poly> out;
    switch (cfg.decoder) {
        case Decoder::BruteForce: out = list_decode_bruteforce(code, r, spec.radius(), cfg.brute); break;
        case Decoder::Sudan: out = sudan_list_decode(code, r, spec.radius(), cfg.sudan); break;
        case Decoder::BW:
            if (auto m = bw_decode(code, r)) out.push_back(*m);
            break;
    }
    if (cfg.variant == Variant::BoundedDistance && out.size() > 1) out.erase(out.begin() + 1, out.end());
    return out;
}

std::vector<Relation> relations_for_exponent(const DlogConfig& cfg, const BigInt& i) {
    InstanceSpec spec(cfg.field, cfg.S, cfg.g, cfg.base.pow(i));
    std::vector<Relation> out;
    for (const Poly& m : run_decoder(cfg, spec))
        if (auto rel = relation_from_codeword(spec, m, cfg.base, i)) out.push_back(std::move(*rel));
    return out;
}

ModLinearSystem RelationSystem::linear() const {
    ModLinearSystem sys{N, unknowns.size(), {}, {}};
    for (const Relation& r : rows) sys.add_row(incidence(unknowns, r.A), r.i);
    return sys;
}

CollectionState collect_relations(const DlogConfig& cfg, std::optional<CollectionState> resume) {
    validate(cfg);
    const BigInt& N = cfg.field.order();
    CollectionState st;
    if (resume) {
        st = std::move(*resume);
        st.trial_exponents.clear();
    } else {
        st.system = RelationSystem{N, cfg.S, {}};
    }
    RankTracker tracker(N, cfg.S.size());
    std::set<std::vector<Residue>> seen;
    std::uint64_t since_growth = 0;
    for (const Relation& r : st.system.rows) {
        seen.insert(r.A);
        since_growth = tracker.add_row(incidence(cfg.S, r.A)) ? 0 : since_growth + 1;
    }
    Rng rng(cfg.seed, 1);
    for (std::uint64_t t = 0; t < st.trials_done; ++t) st.trial_exponents.push_back(rng.below(N));

    const std::uint64_t window = cfg.stall_window ? cfg.stall_window : 2 * cfg.S.size();
    const BigInt all_subsets = binomial(cfg.S.size(), cfg.g);
    auto stop_reason = [&]() -> std::string {
        if (tracker.full()) return "determined";
        if (since_growth >= window) return "stalled";
        if (to_big(seen.size()) == all_subsets) return "exhausted";
        if (st.trials_done >= cfg.max_trials) return "max_trials";
        return "";
    };

    st.stop_reason = stop_reason();
    const std::uint64_t batch_cap = 8 * std::max(1u, cfg.threads);
    while (st.stop_reason.empty()) {
        const std::uint64_t batch = std::min(batch_cap, cfg.max_trials - st.trials_done);
        std::vector<BigInt> exps(batch);
        for (auto& e : exps) e = rng.below(N);
        std::vector<std::vector<Relation>> found(batch);
        parallel_for(batch, cfg.threads, [&](std::size_t t) { found[t] = relations_for_exponent(cfg, exps[t]); });
        for (std::uint64_t t = 0; t < batch && st.stop_reason.empty(); ++t) {
            ++st.trials_done;
            st.trial_exponents.push_back(exps[t]);
            if (!found[t].empty()) ++st.hits;
            for (Relation& r : found[t]) {
                if (!seen.insert(r.A).second) continue;
                since_growth = tracker.add_row(incidence(cfg.S, r.A)) ? 0 : since_growth + 1;
                st.system.rows.push_back(std::move(r));
            }
            st.stop_reason = stop_reason();
        }
    }
    st.ranks = tracker.ranks();
    st.determined = tracker.full();
    return st;
}

std::optional<LogTable> solve_log_system(const DlogConfig& cfg, const RelationSystem& system) {
    const ModSolution sol = solve_mod(system.linear());
    ensure(sol.consistent(), "verified relations are consistent");
    if (!sol.unique()) return std::nullopt;
    LogTable table;
    table.verified = true;
    for (std::size_t j = 0; j < system.unknowns.size(); ++j) {
        const Residue a = system.unknowns[j];
        table.logs[a] = sol.particular()[j];
        if (!(cfg.base.pow(sol.particular()[j]) == cfg.field.linear(a))) table.verified = false;
    }
    ensure(table.verified, "unique solution satisfies b^L_a = alpha - a");
    return table;
}

Extraction extract_target_log(const DlogConfig& cfg, const LogTable& logs) {
    if (!logs.verified) throw Error(ErrorKind::InvalidArgument, "log table is not verified");
    const BigInt& N = cfg.field.order();
    Rng rng(cfg.seed, 2);
    Extraction ex;
    ex.path = "table";
    while (ex.trials < cfg.max_trials) {
        ++ex.trials;
        const BigInt j = rng.below(N);
        auto ds = decompositions(cfg, cfg.target * cfg.base.pow(j));
        if (ds.empty()) continue;
        ++ex.hits;
        BigInt e = -j;
        for (Residue a : ds.front()) e += logs.logs.at(a);
        ex.exponent = mod_floor(e, N);
        ensure(cfg.base.pow(ex.exponent) == cfg.target, "extracted exponent verifies");
        return ex;
    }
    throw Error(ErrorKind::Computation,
                "no decomposition of t*b^j found within " + std::to_string(cfg.max_trials) + " extraction trials");
}

Extraction extract_by_dependence(const DlogConfig& cfg, const RelationSystem& system) {
    const BigInt& N = cfg.field.order();
    const std::size_t n = system.unknowns.size();
    ModLinearSystem aug{N, n + 1, {}, {}};
    for (const Relation& r : system.rows) aug.add_row(incidence(system.unknowns, r.A, 1), r.i);
    std::vector<BigInt> pick(n + 1, 0);
    pick[n] = 1;
    std::set<std::vector<Residue>> seen;
    Rng rng(cfg.seed, 2);
    Extraction ex;
    ex.path = "dependence";
    while (ex.trials < cfg.max_trials) {
        ++ex.trials;
        const BigInt j = rng.below(N);
        auto ds = decompositions(cfg, cfg.target * cfg.base.pow(j));
        if (ds.empty()) continue;
        ++ex.hits;
        bool added = false;
        for (const auto& A : ds) {
            if (!seen.insert(A).second) continue;
            auto row = incidence(system.unknowns, A, 1);
            row[n] = -1;
            aug.add_row(std::move(row), j);
            added = true;
        }
        if (!added) continue;
        const ModSolution sol = solve_mod(aug);
        ensure(sol.consistent(), "augmented relations are consistent");
        if (auto v = sol.functional(pick)) {
            ex.exponent = *v;
            ensure(cfg.base.pow(ex.exponent) == cfg.target, "dependence-derived exponent verifies");
            return ex;
        }
    }
    throw Error(ErrorKind::Computation,
                "target log not determined within " + std::to_string(cfg.max_trials) + " extraction trials");
}

DlogReport dlog_via_rs(const DlogConfig& cfg, std::optional<CollectionState> resume) {
    DlogReport rep;
    rep.collection = collect_relations(cfg, std::move(resume));
    auto table = solve_log_system(cfg, rep.collection.system);
    rep.table_unique = table.has_value();
    rep.extraction = table ? extract_target_log(cfg, *table) : extract_by_dependence(cfg, rep.collection.system);
    rep.verified = cfg.base.pow(rep.extraction.exponent) == cfg.target;
    ensure(rep.verified, "final exponent verifies");
    return rep;
}

}  // namespace rslab
