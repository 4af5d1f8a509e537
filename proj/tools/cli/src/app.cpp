#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "rslab/cli.hpp"
#include "rslab/error.hpp"

namespace rslab::cli {

namespace {

std::string flag_name(const std::string& key) {
    std::string f = key;
    for (char& c : f)
        if (c == '_') c = '-';
    return "--" + f;
}

json from_flag_text(const ParamSpec& p, const std::string& text) {
    auto bad = [&](const char* what) {
        return Error(ErrorKind::Usage, "field '" + p.name + "' must be " + what + ", got '" + text + "'");
    };
    try {
        std::size_t used = 0;
        switch (p.type) {
            case ParamType::Integer: {
                const long long v = std::stoll(text, &used);
                if (used != text.size()) throw bad("an integer");
                return v;
            }
            case ParamType::Real: {
                const double v = std::stod(text, &used);
                if (used != text.size()) throw bad("a number");
                return v;
            }
            default: return text;
        }
    } catch (const std::invalid_argument&) {
        throw bad("a number");
    } catch (const std::out_of_range&) {
        throw bad("within range");
    }
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

std::string render_human(const json& report) {
    std::ostringstream os;
    os << report["command"].get<std::string>() << "\n";
    for (const auto& [key, value] : report["results"].items()) os << "  " << key << ": " << scalar_text(value) << "\n";
    if (!report["seed"].is_null()) os << "  seed: " << report["seed"].dump() << "\n";
    os << "  time: " << std::fixed << std::setprecision(3) << report["timing"]["wall_seconds"].get<double>() << " s\n";
    return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"rslab: Reed-Solomon decoding and discrete logarithm toolkit", "rslab"};
    app.set_help_flag("--help", "print usage and exit");
    app.require_subcommand(0, 1);
    app.fallthrough();
    bool as_json = false, print_job = false;
    std::uint64_t seed = 0;
    std::string job_path;
    auto* seed_opt = app.add_option("--seed", seed, "seed for randomized commands");
    app.add_flag("--json", as_json, "emit the JSON run report");
    app.add_option("--job", job_path, "read the job from a JSON file");
    app.add_flag("--print-job", print_job, "print the normalized job instead of running it");
    app.set_version_flag("--version", std::string(kVersion));

    std::map<std::string, std::map<std::string, std::string>> texts;
    std::map<std::string, std::map<std::string, bool>> flags;
    std::map<std::string, std::map<std::string, CLI::Option*>> opts;
    std::map<std::string, CLI::App*> subs;
    for (const auto& c : command_table()) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        subs[c.name] = sub;
        for (const auto& p : c.params) {
            std::string help = p.help;
            if (!p.fallback.is_null()) help += " (default " + scalar_text(p.fallback) + ")";
            if (p.type == ParamType::Boolean)
                opts[c.name][p.name] = sub->add_flag(flag_name(p.name), flags[c.name][p.name], help);
            else
                opts[c.name][p.name] = sub->add_option(flag_name(p.name), texts[c.name][p.name], help);
        }
    }

    auto fail = [&](const Error& e) {
        const std::string category =
            dynamic_cast<const UnknownCommand*>(&e) ? "unknown_command" : std::string(to_string(e.kind()));
        if (as_json) {
            json doc = {{"error", {{"category", category}, {"message", e.what()}}}};
            out << doc.dump(2) << "\n";
        }
        err << "error [" << category << "]: " << e.what() << "\n";
        return exit_code(e.kind());
    };

    try {
        if (argc > 1 && argv[1][0] != '-') (void)find_command(argv[1]);
        app.parse(argc, argv);
    } catch (const UnknownCommand& e) {
        for (int i = 1; i < argc; ++i) as_json |= std::string_view(argv[i]) == "--json";
        return fail(e);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        return fail(Error(ErrorKind::Usage, e.what()));
    }

    try {
        JobSpec job;
        const CLI::App* chosen = nullptr;
        for (const auto& [name, sub] : subs)
            if (sub->parsed()) chosen = sub;
        if (!job_path.empty()) {
            if (chosen) throw Error(ErrorKind::Usage, "--job cannot be combined with a command");
            job = read_job_file(job_path);
        } else if (chosen) {
            const CommandSpec& spec = find_command(chosen->get_name());
            json doc = {{"command", spec.name}};
            for (const auto& p : spec.params) {
                if (opts[spec.name][p.name]->count() == 0) continue;
                doc[p.name] = p.type == ParamType::Boolean ? json(flags[spec.name][p.name])
                                                           : from_flag_text(p, texts[spec.name][p.name]);
            }
            job = parse_job(doc);
        } else {
            err << app.help();
            return exit_code(ErrorKind::Usage);
        }
        if (as_json) job.output = OutputMode::Json;
        as_json = job.output == OutputMode::Json;
        if (seed_opt->count() > 0) job.seed = seed;

        if (print_job) {
            out << serialize_job(job).dump(2) << "\n";
            return 0;
        }
        const json report = dispatch(job);
        if (as_json)
            out << report.dump(2) << "\n";
        else
            out << render_human(report);
        if (job.command == "selftest" && !report["results"]["passed"].get<bool>()) {
            err << "selftest: at least one property failed\n";
            return exit_code(ErrorKind::Internal);
        }
        return 0;
    } catch (const Error& e) {
        return fail(e);
    } catch (const std::exception& e) {
        return fail(Error(ErrorKind::Internal, e.what()));
    }
}

}  // namespace rslab::cli
