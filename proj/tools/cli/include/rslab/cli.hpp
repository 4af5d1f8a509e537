#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rslab/error.hpp"

namespace rslab::cli {

using json = nlohmann::ordered_json;

inline constexpr std::string_view kVersion = "0.1.0";

enum class OutputMode { Human, Json };

enum class ParamType { Integer, Real, Text, Residues, Boolean };

struct ParamSpec {
    std::string name;  // job-file key; the flag is --name with '_' as '-'
    ParamType type;
    bool required = false;
    json fallback;     // used when absent and not required; null means "no value"
    std::string help;
};

struct CommandSpec {
    std::string name;
    std::string help;
    std::vector<ParamSpec> params;
    bool randomized = false;
};

/// A usage error reported under its own category, "unknown_command".
class UnknownCommand : public Error {
public:
    explicit UnknownCommand(const std::string& name)
        : Error(ErrorKind::Usage, "unknown command '" + name + "'") {}
};

const std::vector<CommandSpec>& command_table();
/// Throws UnknownCommand for an unknown name.
const CommandSpec& find_command(std::string_view name);

struct JobSpec {
    std::string command;
    json params = json::object();  // only keys supplied by the user, in schema order
    std::optional<std::uint64_t> seed;
    OutputMode output = OutputMode::Human;

    bool operator==(const JobSpec&) const = default;
};

/// Validates a job-file object against the command schema. Errors name the
/// offending field.
JobSpec parse_job(const json& doc);
json serialize_job(const JobSpec& job);
JobSpec read_job_file(const std::string& path);

/// Runs the command and returns {command, inputs, results, timing, seed, version}.
json dispatch(const JobSpec& job);

/// RSLAB_GUARD_OVERRIDE when set, else the library default.
std::uint64_t guard_or_override(std::uint64_t fallback);

/// Exhaustive small-field invariant suite; one entry per property.
json run_selftest(std::uint64_t seed);

/// Human-readable rendering of a report.
std::string render_human(const json& report);

/// Full command-line entry point; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rslab::cli
