#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rslab/cli.hpp"

using namespace rslab;
using namespace rslab::cli;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "rslab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
    args.push_back("--json");
    Outcome o = invoke(std::move(args));
    REQUIRE(o.code == 0);
    return json::parse(o.out);
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "rslab_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("report shape") {
    json r = invoke_json({"ghat", "--n", "10", "--k", "2", "--q", "11"});
    CHECK(r["command"] == "ghat");
    CHECK(r["inputs"]["n"] == 10);
    CHECK(r["results"]["ghat"] == 5);
    CHECK(r["results"]["ratio_at_ghat"]["numerator"] == "252");
    CHECK(r["results"]["ratio_at_ghat"]["denominator"] == "1331");
    CHECK(r["version"] == std::string(kVersion));
    CHECK(r["timing"].contains("wall_seconds"));
    CHECK(r["seed"].is_null());

    json w = invoke_json({"weil", "--q", "257", "--h", "2", "--k", "12"});
    CHECK(w["results"]["lower_bound"]["numerator"].is_string());
    CHECK(w["results"]["sufficient"] == true);
}

TEST_CASE("exit codes and categories") {
    Outcome unknown = invoke({"frobnicate", "--json"});
    CHECK(unknown.code == 2);
    CHECK(json::parse(unknown.out)["error"]["category"] == "unknown_command");

    Outcome malformed = invoke({"ghat", "--n", "ten", "--k", "2", "--q", "11", "--json"});
    CHECK(malformed.code == 2);
    CHECK(json::parse(malformed.out)["error"]["category"] == "usage");

    Outcome missing = invoke({"ghat", "--n", "10", "--k", "2"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("'q'") != std::string::npos);

    Outcome domain = invoke({"census", "--q", "5", "--h-poly", "1,0,1", "--g", "3", "--json"});
    CHECK(domain.code == 2);
    CHECK(json::parse(domain.out)["error"]["category"] == "domain");

    Outcome guard = invoke({"nkcount", "--q", "1009", "--h-poly", "11,0,1", "--k", "4", "--json"});
    CHECK(guard.code == 3);
    CHECK(json::parse(guard.out)["error"]["category"] == "guard");

    Outcome budget = invoke({"dlog", "--q", "13", "--h-poly", "2,0,1", "--target", "1,1", "--variant", "bdd",
                             "--max-trials", "1", "--seed", "1", "--json"});
    CHECK((budget.code == 4 || budget.code == 0));

    Outcome noseed = invoke({"dlog", "--q", "7", "--h-poly", "3,1,1", "--target", "2,5", "--g", "4", "--json"});
    CHECK(noseed.code == 2);
    CHECK(invoke({"dlog", "--q", "7", "--h-poly", "3,1,1", "--target", "2,5", "--g", "4"}).code == 0);

    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({}).code == 2);
}

TEST_CASE("guard override") {
    std::vector<std::string> args{"grouporder", "--q", "1009", "--h-poly", "11,0,1", "--subset", "0,1"};
    CHECK(invoke(args).code == 3);
    setenv("RSLAB_GUARD_OVERRIDE", "2000000", 1);
    Outcome raised = invoke(args);
    setenv("RSLAB_GUARD_OVERRIDE", "lots", 1);
    Outcome bad = invoke(args);
    unsetenv("RSLAB_GUARD_OVERRIDE");
    CHECK(raised.code == 0);
    CHECK(bad.code == 2);
}

TEST_CASE("job files round-trip") {
    JobSpec minimal = parse_job(json::parse(R"({"command":"ghat","n":2,"k":1,"q":2})"));
    CHECK(minimal.command == "ghat");
    CHECK(parse_job(serialize_job(minimal)) == minimal);
    CHECK(serialize_job(parse_job(serialize_job(minimal))) == serialize_job(minimal));

    JobSpec full = parse_job(json::parse(
        R"({"command":"dlog","q":7,"h_poly":"3,1,1","target":"2,5","g":4,"subset":"0,1,2,3,4,5,6","seed":9,"output":"json"})"));
    CHECK(full.params["subset"].is_array());
    CHECK(full.seed == 9u);
    CHECK(full.output == OutputMode::Json);
    CHECK(parse_job(serialize_job(full)) == full);

    try {
        (void)parse_job(json::parse(R"({"command":"ghat","n":2,"k":1})"));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("'q'") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_job(json::parse(R"({"command":"ghat","n":2,"k":1,"q":2,"z":1})")), Error);
    CHECK_THROWS_AS(parse_job(json::parse(R"({"command":"ghat","n":"two","k":1,"q":2})")), Error);
    CHECK_THROWS_AS(parse_job(json::parse(R"({"n":2})")), Error);
    CHECK_THROWS_AS(parse_job(json::parse(R"({"command":"nope"})")), UnknownCommand);

    const auto path = scratch("job.json");
    write(path, R"({"command":"ghat","n":10,"k":2,"q":11})");
    Outcome printed = invoke({"--job", path.string(), "--print-job"});
    REQUIRE(printed.code == 0);
    write(path, printed.out);
    CHECK(invoke({"--job", path.string(), "--print-job"}).out == printed.out);
    json report = invoke_json({"--job", path.string()});
    CHECK(report["results"]["ghat"] == 5);
}

TEST_CASE("dlog job resumes from a persisted relation file") {
    const auto rel = scratch("relations.json");
    std::filesystem::remove(rel);
    const std::vector<std::string> base{"dlog", "--q", "7", "--h-poly", "3,1,1", "--target", "2,5", "--g", "4", "--seed", "3"};
    auto with = [&](std::vector<std::string> extra) {
        std::vector<std::string> a = base;
        a.insert(a.end(), extra.begin(), extra.end());
        return a;
    };
    json part = invoke_json(with({"--max-trials", "4", "--collect-only", "--relations-out", rel.string()}));
    CHECK(part["results"]["collection"]["trials"] == 4);

    const auto job = scratch("resume.json");
    write(job, R"({"command":"dlog","q":7,"h_poly":"3,1,1","target":"2,5","g":4,"seed":3,"relations_in":")" +
                   rel.string() + R"("})");
    json resumed = invoke_json({"--job", job.string()});
    json whole = invoke_json(base);
    CHECK(resumed["results"].dump() == whole["results"].dump());

    json other = invoke_json(with({"--base", "0,1"}));
    CHECK(other["results"]["verified"] == true);
    Outcome mismatch = invoke({"dlog", "--q", "7", "--h-poly", "3,1,1", "--target", "2,5", "--g", "4", "--seed", "4",
                               "--relations-in", rel.string()});
    CHECK(mismatch.code == 2);
}

TEST_CASE("replayed commands give identical results") {
    const std::vector<std::vector<std::string>> jobs{
        {"dlog", "--q", "7", "--h-poly", "3,1,1", "--target", "3", "--g", "5", "--seed", "11", "--decoder", "sudan"},
        {"census", "--q", "7", "--h-poly", "3,1,1", "--g", "3", "--sample", "500", "--seed", "5"},
        {"selftest", "--seed", "2"},
    };
    for (const auto& j : jobs) CHECK(invoke_json(j)["results"].dump() == invoke_json(j)["results"].dump());
}

TEST_CASE("commands") {
    CHECK(invoke_json({"encode", "--q", "7", "--k", "2", "--message", "1,1"})["results"]["word"] ==
          json::parse("[1,2,3,4,5,6,0]"));
    json dec = invoke_json({"decode", "--q", "7", "--k", "2", "--word", "1,2,3,4,5,6,6"});
    CHECK(dec["results"]["message"] == "1,1");
    CHECK(dec["results"]["distance"] == 1);
    for (const char* d : {"brute", "sudan", "bw"}) {
        json l = invoke_json({"listdecode", "--q", "7", "--k", "2", "--word", "1,2,3,4,5,6,6", "--radius", "2",
                              "--decoder", d});
        CHECK(l["results"]["messages"] == json::parse(R"(["1,1"])"));
    }
    json census = invoke_json({"census", "--q", "5", "--h-poly", "2,0,1", "--g", "3"});
    CHECK(census["results"]["total"] == 10);
    CHECK(census["results"]["counts"]["1"] == 1);
    json sub = invoke_json({"census", "--q", "5", "--h-poly", "2,0,1", "--g", "2", "--subset", "0,1,2"});
    CHECK(sub["results"]["total"] == 3);

    json nk = invoke_json({"nkcount", "--q", "5", "--h-poly", "2,0,1", "--k", "2", "--table"});
    CHECK(nk["results"]["total"] == 10);
    CHECK(nk["results"]["counts"].size() == 24);

    json t3 = invoke_json({"theorem3", "--q", "13", "--h-poly", "2,0,1"});
    CHECK(t3["results"]["weil"]["sufficient"] == false);

    json go = invoke_json({"grouporder", "--q", "5", "--h-poly", "2,0,1", "--subset", "0,1,2,3,4"});
    json go1 = invoke_json({"grouporder", "--q", "5", "--h-poly", "2,0,1", "--subset", "0,1,2,3,4", "--method", "closure"});
    CHECK(go["results"]["order"] == go1["results"]["order"]);

    json l1 = invoke_json({"lemma1", "--h-max", "10", "--n-max", "200"});
    CHECK(l1["results"]["solution_count"] == 0);
    CHECK(l1["results"]["closest"]["ratio"]["numerator"] == "1");

    json st = invoke_json({"selftest"});
    CHECK(st["results"]["passed"] == true);
    CHECK(st["results"]["properties"].size() >= 8);
}
