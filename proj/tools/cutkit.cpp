// cutkit: scenario-driven verification front end for circle cutting of
// manifolds-with-boundary and equivariant radial-squared blowups on the
// explicit local models.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "cutkit/corpus.hpp"
#include "cutkit/io.hpp"
#include "cutkit/scenario.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitJobFailure = 1;
constexpr int kExitSchemaError = 2;
constexpr int kExitInternalError = 3;

std::optional<uint64_t> env_seed() {
    const char* env = std::getenv("CUTKIT_SEED");
    if (!env || !*env) return std::nullopt;
    return std::strtoull(env, nullptr, 10);
}

void write_json(const std::string& path, const cutkit::json& doc) {
    std::ofstream out(path);
    if (!out) throw cutkit::Error("cannot write " + path);
    out << doc.dump(2) << "\n";
}

cutkit::Scenario load_scenario(const std::string& arg) {
    namespace fs = std::filesystem;
    if (fs::exists(arg)) {
        std::ifstream in(arg);
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        return cutkit::scenario_from_string(text);
    }
    if (const std::string* text = cutkit::find_corpus_entry(arg))
        return cutkit::scenario_from_string(*text);
    throw cutkit::SchemaError("no such scenario file or corpus entry: " + arg);
}

int run_scenarios(const std::vector<cutkit::Scenario>& scenarios,
                  std::optional<uint64_t> seed, const std::string& filter,
                  const std::string& json_path) {
    cutkit::json reports = cutkit::json::array();
    bool failed = false, errored = false;
    for (auto& scenario : scenarios) {
        auto report = scenario.run(seed, filter);
        report.print(std::cout);
        reports.push_back(report.to_json());
        failed = failed || !report.passed();
        errored = errored || report.errored();
    }
    if (!json_path.empty())
        write_json(json_path, reports.size() == 1 ? reports.front() : reports);
    if (errored) return kExitInternalError;
    return failed ? kExitJobFailure : kExitPass;
}

int run_suite(uint64_t seed, int trials, const std::string& json_path,
              const std::string& filter) {
    cutkit::json results = cutkit::json::array();
    bool failed = false;
    for (auto& [name, fn] : cutkit::props::property_registry()) {
        if (!filter.empty() && name.find(filter) == std::string::npos) continue;
        auto result = cutkit::props::run_property(name, seed, trials);
        std::cout << "[" << (result.passed() ? "PASS" : "FAIL") << "] " << name;
        if (!result.witnesses.empty())
            std::cout << ": " << result.witnesses.front().description;
        if (!result.message.empty()) std::cout << ": " << result.message;
        std::cout << "\n";
        results.push_back(cutkit::to_json(result));
        failed = failed || !result.passed();
    }
    std::cout << (failed ? "FAIL" : "PASS") << " property suite (seed " << seed << ")\n";
    if (!json_path.empty())
        write_json(json_path, {{"suite", "properties"},
                               {"seed", seed},
                               {"trials", trials},
                               {"status", failed ? "fail" : "pass"},
                               {"results", results}});
    return failed ? kExitJobFailure : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circle cutting / radial-squared blowup verification kernel"};
    app.require_subcommand(1);

    std::string scenario_arg, json_path, filter;
    uint64_t seed_value = 0;
    bool list_corpus = false, run_all = false;
    int trials = 100;

    auto* run = app.add_subcommand("run", "run a scenario file or corpus entry");
    run->add_option("scenario", scenario_arg, "scenario path or corpus name");
    run->add_option("--json", json_path, "write a JSON report to this path");
    auto* run_seed = run->add_option("--seed", seed_value, "override the scenario seed");
    run->add_option("--filter", filter, "run only jobs whose name contains this substring");
    run->add_flag("--list-corpus", list_corpus, "list bundled scenarios and exit");

    auto* corpus_cmd = app.add_subcommand("corpus", "list or run the bundled scenarios");
    corpus_cmd->add_flag("--all", run_all, "run every bundled scenario");
    corpus_cmd->add_option("--json", json_path, "write a JSON report to this path");
    auto* corpus_seed =
        corpus_cmd->add_option("--seed", seed_value, "override the scenario seeds");

    auto* suite = app.add_subcommand("suite", "run all registered property suites");
    suite->add_option("--json", json_path, "write a JSON report to this path");
    auto* suite_seed = suite->add_option("--seed", seed_value, "seed for the suites");
    suite->add_option("--trials", trials, "trials per property");
    suite->add_option("--filter", filter, "run only properties containing this substring");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            if (list_corpus) {
                for (auto& [name, text] : cutkit::corpus()) std::cout << name << "\n";
                return kExitPass;
            }
            if (scenario_arg.empty()) {
                std::cerr << "error: no scenario given (try --list-corpus)\n";
                return kExitSchemaError;
            }
            std::optional<uint64_t> seed =
                run_seed->count() ? std::optional<uint64_t>(seed_value) : env_seed();
            return run_scenarios({load_scenario(scenario_arg)}, seed, filter, json_path);
        }
        if (corpus_cmd->parsed()) {
            if (!run_all) {
                for (auto& [name, text] : cutkit::corpus()) std::cout << name << "\n";
                return kExitPass;
            }
            std::vector<cutkit::Scenario> scenarios;
            for (auto& [name, text] : cutkit::corpus())
                scenarios.push_back(cutkit::scenario_from_string(text));
            std::optional<uint64_t> seed =
                corpus_seed->count() ? std::optional<uint64_t>(seed_value) : env_seed();
            return run_scenarios(scenarios, seed, "", json_path);
        }
        if (suite->parsed()) {
            uint64_t seed =
                suite_seed->count() ? seed_value : env_seed().value_or(42);
            return run_suite(seed, trials, json_path, filter);
        }
    } catch (const cutkit::SchemaError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitSchemaError;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInternalError;
    }
    return kExitInternalError;
}
