#include <fstream>
#include <sstream>

#include "rslab/cli.hpp"
#include "rslab/error.hpp"

namespace rslab::cli {

namespace {

using T = ParamType;

ParamSpec req(std::string name, ParamType type, std::string help) {
    return {std::move(name), type, true, nullptr, std::move(help)};
}

ParamSpec opt(std::string name, ParamType type, json fallback, std::string help) {
    return {std::move(name), type, false, std::move(fallback), std::move(help)};
}

std::vector<CommandSpec> build_table() {
    const ParamSpec q = req("q", T::Integer, "prime field size");
    const ParamSpec h_poly = req("h_poly", T::Text, "monic irreducible modulus, ascending coefficients");
    const ParamSpec subset = opt("subset", T::Residues, nullptr, "evaluation set; defaults to all of F_q");
    const ParamSpec threads = opt("threads", T::Integer, 1, "worker threads");
    return {
        {"ghat", "hardness threshold g-hat(n, k, q)",
         {req("n", T::Integer, "code length"), req("k", T::Integer, "dimension"), q}, false},
        {"lemma1", "exhaustive search for counterexamples to Lemma 1",
         {opt("h_max", T::Integer, 88, "exclusive bound on h"), opt("n_max", T::Integer, 15664, "exclusive bound on n"),
          opt("c", T::Integer, 0, "exponent offset"), threads},
         false},
        {"encode", "Reed-Solomon encoding",
         {q, req("k", T::Integer, "dimension"), req("message", T::Text, "message polynomial"), subset}, false},
        {"decode", "Berlekamp-Welch unique decoding",
         {q, req("k", T::Integer, "dimension"), req("word", T::Residues, "received word"), subset}, false},
        {"listdecode", "list decoding at a given radius",
         {q, req("k", T::Integer, "dimension"), req("word", T::Residues, "received word"),
          req("radius", T::Integer, "decoding radius"), opt("decoder", T::Text, "brute", "brute, sudan or bw"), subset,
          opt("allow_incomplete", T::Boolean, false, "run Sudan below its completeness bound"), threads},
         false},
        {"census", "preimage counts of psi over g-subsets",
         {q, h_poly, req("g", T::Integer, "subset size"), subset,
          opt("sample", T::Integer, 0, "draw this many random subsets instead of enumerating"), threads},
         true},
        {"dlog", "discrete logarithm through Reed-Solomon decoding",
         {q, h_poly, opt("base", T::Text, nullptr, "primitive base; defaults to the first primitive element"),
          req("target", T::Text, "target element"), opt("variant", T::Text, "list", "list or bdd"),
          opt("g", T::Integer, nullptr, "subset size; defaults to 4h+4 for bdd"),
          opt("decoder", T::Text, "brute", "brute, sudan or bw"), opt("max_trials", T::Integer, 10000, "trial budget"),
          opt("stall_window", T::Integer, 0, "rows without rank growth before stopping; 0 means 2|S|"), subset, threads,
          opt("relations_in", T::Text, nullptr, "resume from a saved relation file"),
          opt("relations_out", T::Text, nullptr, "save the relation system here"),
          opt("collect_only", T::Boolean, false, "stop after relation collection")},
         true},
        {"nkcount", "N_k(beta) for every beta by dynamic programming",
         {q, h_poly, req("k", T::Integer, "number of distinct factors"),
          opt("table", T::Boolean, false, "include the full count table")},
         false},
        {"theorem3", "Theorem 3 check at k = 4h+4", {q, h_poly}, false},
        {"weil", "exact Weil lower bound",
         {q, req("h", T::Integer, "extension degree"), req("k", T::Integer, "number of factors")}, false},
        {"grouporder", "order of the subgroup generated by alpha - a, a in S",
         {q, h_poly, req("subset", T::Residues, "generating set"),
          opt("method", T::Text, "both", "closure, dlog-gcd or both")},
         false},
        {"selftest", "small-field invariant suite", {}, false},
    };
}

json normalize(const ParamSpec& p, const json& v) {
    auto bad = [&](const char* what) {
        return Error(ErrorKind::Usage, "field '" + p.name + "' must be " + what);
    };
    switch (p.type) {
        case T::Integer:
            if (!v.is_number_integer()) throw bad("an integer");
            return v;
        case T::Real:
            if (!v.is_number()) throw bad("a number");
            return v;
        case T::Boolean:
            if (!v.is_boolean()) throw bad("a boolean");
            return v;
        case T::Text:
            if (v.is_number_integer()) return v.dump();
            if (!v.is_string()) throw bad("a string");
            return v;
        case T::Residues: {
            json out = json::array();
            if (v.is_string()) {
                std::stringstream ss(v.get<std::string>());
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    std::size_t used = 0;
                    long long x = -1;
                    try {
                        x = std::stoll(tok, &used);
                    } catch (const std::exception&) {
                        throw bad("a comma-separated list of residues");
                    }
                    if (x < 0 || tok.find_first_not_of(" \t", used) != std::string::npos)
                        throw bad("a comma-separated list of residues");
                    out.push_back(static_cast<std::uint64_t>(x));
                }
                return out;
            }
            if (!v.is_array()) throw bad("an array of residues");
            for (const auto& x : v) {
                if (!x.is_number_integer() || x.get<long long>() < 0) throw bad("an array of non-negative integers");
                out.push_back(x.get<std::uint64_t>());
            }
            return out;
        }
    }
    throw Error(ErrorKind::Internal, "unhandled parameter type");
}

}  // namespace

const std::vector<CommandSpec>& command_table() {
    static const std::vector<CommandSpec> table = build_table();
    return table;
}

const CommandSpec& find_command(std::string_view name) {
    for (const auto& c : command_table())
        if (c.name == name) return c;
    throw UnknownCommand(std::string(name));
}

JobSpec parse_job(const json& doc) {
    if (!doc.is_object()) throw Error(ErrorKind::Usage, "job must be a JSON object");
    if (!doc.contains("command")) throw Error(ErrorKind::Usage, "missing required field 'command'");
    if (!doc["command"].is_string()) throw Error(ErrorKind::Usage, "field 'command' must be a string");
    JobSpec job;
    job.command = doc["command"].get<std::string>();
    const CommandSpec& spec = find_command(job.command);

    for (const auto& [key, value] : doc.items()) {
        if (key == "command") continue;
        if (key == "seed") {
            if (!value.is_number_integer() || value.get<long long>() < 0)
                throw Error(ErrorKind::Usage, "field 'seed' must be a non-negative integer");
            job.seed = value.get<std::uint64_t>();
        } else if (key == "output") {
            if (value == "json")
                job.output = OutputMode::Json;
            else if (value == "human")
                job.output = OutputMode::Human;
            else
                throw Error(ErrorKind::Usage, "field 'output' must be \"json\" or \"human\"");
        } else {
            bool known = false;
            for (const auto& p : spec.params) known |= p.name == key;
            if (!known) throw Error(ErrorKind::Usage, "unknown field '" + key + "' for command '" + job.command + "'");
        }
    }
    for (const auto& p : spec.params) {
        if (doc.contains(p.name))
            job.params[p.name] = normalize(p, doc[p.name]);
        else if (p.required)
            throw Error(ErrorKind::Usage, "missing required field '" + p.name + "'");
    }
    return job;
}

json serialize_job(const JobSpec& job) {
    json doc = json::object();
    doc["command"] = job.command;
    for (const auto& [key, value] : job.params.items()) doc[key] = value;
    if (job.seed) doc["seed"] = *job.seed;
    doc["output"] = job.output == OutputMode::Json ? "json" : "human";
    return doc;
}

JobSpec read_job_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Usage, "cannot open job file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Usage, "job file '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_job(doc);
}

}  // namespace rslab::cli
