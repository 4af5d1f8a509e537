#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "rslab/bigint.hpp"
#include "rslab/cli.hpp"
#include "rslab/dlog.hpp"
#include "rslab/error.hpp"
#include "rslab/products.hpp"
#include "rslab/radius.hpp"
#include "rslab/reduction.hpp"
#include "rslab/rs_code.hpp"

namespace rslab::cli {

namespace {

json big(const BigInt& v) {
    if (fits_u64(v)) return to_u64(v);
    return to_string(v);
}

json rational(const Rational& r) { return {{"numerator", r.get_num().get_str()}, {"denominator", r.get_den().get_str()}}; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Usage, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Usage, "cannot write '" + path + "'");
    out << text;
}

// Supplied values merged over the schema fallbacks.
class Inputs {
public:
    Inputs(const CommandSpec& spec, const JobSpec& job) {
        for (const auto& p : spec.params) {
            if (job.params.contains(p.name))
                values_[p.name] = job.params[p.name];
            else if (!p.fallback.is_null())
                values_[p.name] = p.fallback;
        }
    }

    const json& echo() const { return values_; }
    bool has(const std::string& name) const { return values_.contains(name); }

    std::uint64_t u64(const std::string& name) const {
        const json& v = get(name);
        if (v.is_number_unsigned()) return v.get<std::uint64_t>();
        if (v.get<long long>() < 0) throw Error(ErrorKind::Usage, "field '" + name + "' must be non-negative");
        return v.get<std::uint64_t>();
    }

    std::int64_t i64(const std::string& name) const { return get(name).get<std::int64_t>(); }
    std::string text(const std::string& name) const { return get(name).get<std::string>(); }
    bool flag(const std::string& name) const { return get(name).get<bool>(); }

    std::vector<Residue> residues(const std::string& name, std::uint64_t q) const {
        std::vector<Residue> out;
        for (const auto& x : get(name)) {
            const std::uint64_t a = x.get<std::uint64_t>();
            if (a >= q)
                throw Error(ErrorKind::InvalidArgument,
                            "field '" + name + "' has residue " + std::to_string(a) + " outside [0, " + std::to_string(q) + ")");
            out.push_back(a);
        }
        return out;
    }

    std::vector<Residue> subset_or_all(std::uint64_t q) const {
        if (has("subset")) return residues("subset", q);
        std::vector<Residue> all(q);
        for (Residue a = 0; a < q; ++a) all[a] = a;
        return all;
    }

private:
    const json& get(const std::string& name) const {
        if (!values_.contains(name)) throw Error(ErrorKind::Usage, "missing required field '" + name + "'");
        return values_[name];
    }

    json values_ = json::object();
};

// Deterministic seed handling: randomized commands in json mode must carry one.
std::uint64_t effective_seed(const JobSpec& job, bool randomized) {
    if (job.seed) return *job.seed;
    if (randomized && job.output == OutputMode::Json)
        throw Error(ErrorKind::Usage, "command '" + job.command + "' is randomized and needs --seed in json mode");
    return 1;
}

unsigned thread_count(const Inputs& in) {
    const std::uint64_t t = in.u64("threads");
    if (t < 1 || t > 1024) throw Error(ErrorKind::Usage, "field 'threads' must be between 1 and 1024");
    return static_cast<unsigned>(t);
}

ExtField field_of(const Inputs& in) { return ExtField::make(in.u64("q"), in.text("h_poly")); }

json cmd_ghat(const Inputs& in) {
    const GhatResult r = ghat(in.u64("n"), in.u64("k"), in.u64("q"));
    return {{"ghat", r.ghat},
            {"radius", r.n - r.ghat},
            {"ratio_at_ghat", rational(r.ratio_at_ghat)},
            {"ratio_below", rational(r.ratio_below)}};
}

json cmd_lemma1(const Inputs& in) {
    Lemma1Options o{in.u64("h_max"), in.u64("n_max"), in.i64("c"), thread_count(in)};
    const Lemma1Report r = lemma1_search(o);
    json sols = json::array();
    for (const auto& s : r.solutions) sols.push_back({s.n, s.g, s.h});
    json out = {{"solution_count", r.solutions.size()},
                {"solutions", sols},
                {"triples_scanned", r.triples_scanned},
                {"exact_checks", r.exact_checks},
                {"cap_truncated", r.cap_truncated}};
    if (r.closest.n != 0) {
        const auto& c = r.closest;
        // C(n,g) / n^(h-c), the quantity compared against 1
        const std::int64_t ex = static_cast<std::int64_t>(c.h) - o.c;
        Rational ratio = ex >= 0 ? Rational(binomial(c.n, c.g), power(c.n, static_cast<std::uint64_t>(ex)))
                                 : Rational(binomial(c.n, c.g) * power(c.n, static_cast<std::uint64_t>(-ex)));
        ratio.canonicalize();
        out["closest"] = {{"n", c.n}, {"g", c.g}, {"h", c.h}, {"ratio", rational(ratio)}};
    }
    out["closest_log2_margin"] = r.closest_log2_margin;
    out["boundary_log2_margin"] = r.boundary_log2_margin;
    return out;
}

RSParams code_of(const Inputs& in) {
    const std::uint64_t q = in.u64("q");
    return RSParams(PrimeField(q), in.subset_or_all(q), in.u64("k"));
}

json cmd_encode(const Inputs& in) {
    const RSParams code = code_of(in);
    const Word w = rs_encode(code, parse_poly(code.field(), in.text("message")));
    return {{"n", code.n()}, {"word", w}};
}

json cmd_decode(const Inputs& in) {
    const RSParams code = code_of(in);
    const Word r = in.residues("word", code.field().modulus());
    check_word(code, r);
    const auto m = bw_decode(code, r);
    json out = {{"unique_radius", code.unique_radius()}};
    if (m) {
        out["message"] = to_text(*m);
        out["distance"] = hamming_distance(rs_encode(code, *m), r);
    } else {
        out["message"] = nullptr;
    }
    return out;
}

json cmd_listdecode(const Inputs& in) {
    const RSParams code = code_of(in);
    const Word r = in.residues("word", code.field().modulus());
    check_word(code, r);
    const std::uint64_t radius = in.u64("radius");
    if (radius > code.n()) throw Error(ErrorKind::InvalidArgument, "radius exceeds the code length");
    const Decoder d = parse_decoder(in.text("decoder"));
    std::vector<Poly> list;
    bool complete = true;
    if (d == Decoder::BruteForce) {
        list = list_decode_bruteforce(code, r, radius, {guard_or_override(BruteForceOptions{}.guard), thread_count(in)});
    } else if (d == Decoder::Sudan) {
        complete = code.n() - radius >= sudan_agreement_bound(code.n(), code.k());
        list = sudan_list_decode(code, r, radius, {in.flag("allow_incomplete")});
    } else {
        if (radius > code.unique_radius())
            throw Error(ErrorKind::InvalidArgument, "Berlekamp-Welch needs radius <= " + std::to_string(code.unique_radius()));
        if (auto m = bw_decode(code, r); m && hamming_distance(rs_encode(code, *m), r) <= radius) list.push_back(*m);
    }
    json msgs = json::array();
    for (const auto& m : list) msgs.push_back(to_text(m));
    return {{"count", list.size()}, {"messages", msgs}, {"complete", complete}};
}

json count_map(const CountTable& t) {
    json counts = json::object();
    for (const auto& [idx, c] : t.counts) counts[to_text(t.field.from_index(idx))] = big(c);
    return counts;
}

json cmd_census(const Inputs& in, std::uint64_t seed) {
    const ExtField K = field_of(in);
    const std::vector<Residue> S = in.subset_or_all(K.q());
    const std::uint64_t g = in.u64("g");
    const std::uint64_t samples = in.u64("sample");
    CountTable t = samples > 0 ? psi_sample(K, S, g, samples, seed)
                               : psi_census(K, S, g, {guard_or_override(CensusOptions{}.guard), thread_count(in)});
    json out = {{"mode", t.exact ? "exact" : "sample"}};
    if (t.exact)
        out["total"] = big(t.total());
    else
        out["samples"] = t.samples;
    out["distinct_images"] = t.counts.size();
    out["counts"] = count_map(t);
    return out;
}

json collection_json(const CollectionState& st) {
    const double rate = st.trials_done ? static_cast<double>(st.hits) / static_cast<double>(st.trials_done) : 0.0;
    return {{"trials", st.trials_done},  {"hits", st.hits},           {"hit_rate", rate},
            {"relations", st.system.rows.size()}, {"stop_reason", st.stop_reason}, {"ranks", st.ranks},
            {"determined", st.determined}};
}

json cmd_dlog(const Inputs& in, std::uint64_t seed) {
    const ExtField K = field_of(in);
    DlogConfig cfg{.field = K,
                   .S = in.subset_or_all(K.q()),
                   .variant = parse_variant(in.text("variant")),
                   .decoder = parse_decoder(in.text("decoder")),
                   .base = in.has("base") ? K.parse(in.text("base")) : first_primitive(K),
                   .target = K.parse(in.text("target")),
                   .seed = seed,
                   .max_trials = in.u64("max_trials"),
                   .stall_window = in.u64("stall_window"),
                   .threads = thread_count(in)};
    if (in.has("g"))
        cfg.g = in.u64("g");
    else if (cfg.variant == Variant::BoundedDistance)
        cfg.g = 4 * K.degree() + 4;
    else
        throw Error(ErrorKind::Usage, "missing required field 'g' for variant list");
    cfg.brute.guard = guard_or_override(cfg.brute.guard);
    cfg.brute.threads = 1;

    std::optional<CollectionState> resume;
    if (in.has("relations_in")) resume = load_relations(cfg, slurp(in.text("relations_in")));

    json out = json::object();
    json extra = json::object();
    if (in.flag("collect_only")) {
        validate(cfg);
        CollectionState st = collect_relations(cfg, std::move(resume));
        if (in.has("relations_out")) spill(in.text("relations_out"), save_relations(cfg, st));
        out["collection"] = collection_json(st);
        return out;
    }
    const DlogReport rep = dlog_via_rs(cfg, std::move(resume));
    if (in.has("relations_out")) spill(in.text("relations_out"), save_relations(cfg, rep.collection));
    out["exponent"] = big(rep.extraction.exponent);
    out["verified"] = rep.verified;
    out["path"] = rep.extraction.path;
    out["table_unique"] = rep.table_unique;
    out["collection"] = collection_json(rep.collection);
    out["extraction"] = {{"trials", rep.extraction.trials}, {"hits", rep.extraction.hits}};
    return out;
}

json cmd_nkcount(const Inputs& in) {
    const ExtField K = field_of(in);
    const std::uint64_t k = in.u64("k");
    const NkCounts c = nk_count_dense(K, k, {guard_or_override(NkOptions{}.guard)});
    json out = {{"k", k},
                {"generator", to_text(c.generator)},
                {"min", big(u128_to_big(c.min()))},
                {"max", big(u128_to_big(c.max()))},
                {"total", big(c.total())},
                {"binomial", big(binomial(K.q(), k))}};
    if (in.flag("table")) out["counts"] = count_map(c.table());
    return out;
}

json weil_json(const WeilReport& w) {
    return {{"lower_bound", rational(w.lower_bound)}, {"exact_root", w.exact_root}, {"cond_a", w.cond_a},
            {"cond_b", w.cond_b}, {"sufficient", w.sufficient}};
}

json cmd_theorem3(const Inputs& in) {
    const ExtField K = field_of(in);
    const Theorem3Report r = theorem3_verify(K, {guard_or_override(NkOptions{}.guard)});
    return {{"k", r.k},
            {"min_subsets", big(u128_to_big(r.min_subsets))},
            {"max_subsets", big(u128_to_big(r.max_subsets))},
            {"min_ordered", big(r.min_ordered)},
            {"total", big(r.total)},
            {"min_positive", r.min_positive},
            {"bound_holds", r.bound_holds},
            {"weil", weil_json(r.weil)}};
}

json cmd_weil(const Inputs& in) { return weil_json(weil_lower_bound(in.u64("q"), in.u64("h"), in.u64("k"))); }

json cmd_grouporder(const Inputs& in) {
    const ExtField K = field_of(in);
    const std::vector<Residue> S = in.residues("subset", K.q());
    const std::string method = in.text("method");
    const GroupOrderOptions opts{guard_or_override(GroupOrderOptions{}.guard)};
    json out = {{"group_order", big(K.order())}};
    if (method == "closure" || method == "dlog-gcd") {
        const auto m = method == "closure" ? GroupOrderMethod::Closure : GroupOrderMethod::DlogGcd;
        out["order"] = big(group_order(K, S, m, opts).order);
        out["method"] = method;
        return out;
    }
    if (method != "both") throw Error(ErrorKind::Usage, "field 'method' must be closure, dlog-gcd or both");
    const BigInt a = group_order(K, S, GroupOrderMethod::Closure, opts).order;
    const BigInt b = group_order(K, S, GroupOrderMethod::DlogGcd, opts).order;
    ensure(a == b, "closure and dlog-gcd group orders agree");
    out["order"] = big(a);
    out["method"] = "both";
    return out;
}

}  // namespace

std::uint64_t guard_or_override(std::uint64_t fallback) {
    const char* env = std::getenv("RSLAB_GUARD_OVERRIDE");
    if (!env || !*env) return fallback;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (env[used] != '\0' || env[0] == '-') throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::Usage, std::string("RSLAB_GUARD_OVERRIDE must be a positive integer, got '") + env + "'");
    }
}

json dispatch(const JobSpec& job) {
    const CommandSpec& spec = find_command(job.command);
    const Inputs in(spec, job);
    const bool randomized = spec.randomized && (job.command != "census" || in.u64("sample") > 0);
    const std::uint64_t seed = effective_seed(job, randomized);

    const auto start = std::chrono::steady_clock::now();
    json results;
    const std::string& c = job.command;
    if (c == "ghat") results = cmd_ghat(in);
    else if (c == "lemma1") results = cmd_lemma1(in);
    else if (c == "encode") results = cmd_encode(in);
    else if (c == "decode") results = cmd_decode(in);
    else if (c == "listdecode") results = cmd_listdecode(in);
    else if (c == "census") results = cmd_census(in, seed);
    else if (c == "dlog") results = cmd_dlog(in, seed);
    else if (c == "nkcount") results = cmd_nkcount(in);
    else if (c == "theorem3") results = cmd_theorem3(in);
    else if (c == "weil") results = cmd_weil(in);
    else if (c == "grouporder") results = cmd_grouporder(in);
    else if (c == "selftest") results = run_selftest(seed);
    else throw Error(ErrorKind::Internal, "command '" + c + "' has no handler");
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    json report = json::object();
    report["command"] = job.command;
    report["inputs"] = in.echo();
    report["results"] = std::move(results);
    report["timing"] = {{"wall_seconds", wall}};
    report["seed"] = randomized || job.seed ? json(seed) : json(nullptr);
    report["version"] = std::string(kVersion);
    return report;
}

}  // namespace rslab::cli
