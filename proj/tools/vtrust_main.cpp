// vtrust: run, generate and verify value-based trust scenarios.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "vtrust/generator.hpp"
#include "vtrust/report.hpp"
#include "vtrust/scenario_io.hpp"
#include "vtrust/verification.hpp"

namespace {

using vtrust::ExitCode;

int code(ExitCode c) { return static_cast<int>(c); }

void emit(const std::string& text, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + output);
    out << text;
}

const std::vector<std::string> kModes = {"cautious", "bold", "semi_independent"};

struct RunArgs {
    std::string scenario;
    std::string mode;
    std::string format = "json";
    bool check_theorem = false;
    bool check_props = false;
    std::size_t max_universe = 4;
    std::string relations = "all";
    std::string output;
};

int do_run(const RunArgs& args) {
    vtrust::Scenario scenario = vtrust::load_scenario(args.scenario);
    vtrust::RunOptions options;
    if (!args.mode.empty()) options.mode = vtrust::parse_trust_mode(args.mode);
    options.check_theorem = args.check_theorem;
    if (args.check_props) options.check_props_max_universe = args.max_universe;
    options.relations = vtrust::parse_relation_class(args.relations);
    auto report = vtrust::run(scenario, options);
    emit(args.format == "csv" ? vtrust::report_to_csv(report) : vtrust::report_to_json(report),
         args.output);
    if (!report.complete()) {
        std::cerr << "vtrust: chain stopped at step " << *report.trace.failed_step
                  << ": no capable candidate\n";
    }
    return code(report.exit_code());
}

struct GenerateArgs {
    vtrust::GeneratorConfig config;
    std::string mode = "cautious";
    std::string output;
    bool verbose = false;
};

int do_generate(const GenerateArgs& args) {
    auto config = args.config;
    config.mode = vtrust::parse_trust_mode(args.mode);
    auto generated = vtrust::generate_population(config);
    if (args.verbose) {
        for (const auto& line : generated.repairs) std::cerr << "repair: " << line << '\n';
    }
    emit(vtrust::serialize_scenario(generated.scenario), args.output);
    return code(ExitCode::ok);
}

struct VerifyArgs {
    std::size_t max_universe = 5;
    std::string relations = "all";
    bool check_props = false;
    bool check_theorem = false;
    vtrust::FuzzConfig fuzz;
    std::string counterexample_dir;
    std::string output;
};

int do_verify(const VerifyArgs& args) {
    // Neither flag given means both checks run.
    const bool all = !args.check_props && !args.check_theorem;
    bool passed = true;
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    if (all || args.check_props) {
        auto props = vtrust::check_propositions(
            {args.max_universe, vtrust::parse_relation_class(args.relations), args.fuzz.threads});
        passed = passed && props.passed();
        summary["propositions"] =
            nlohmann::ordered_json::parse(vtrust::proposition_report_to_json(props));
        std::cerr << "propositions (universes up to " << args.max_universe << " values): "
                  << (props.passed() ? "pass" : "FAIL") << ", "
                  << props.total_counterexamples() << " counterexamples\n";
    }
    if (all || args.check_theorem) {
        auto fuzz = vtrust::fuzz_theorem(args.fuzz);
        passed = passed && fuzz.passed();
        summary["theorem"] = nlohmann::ordered_json::parse(vtrust::fuzz_report_to_json(fuzz));
        std::cerr << "theorem fuzzing over " << fuzz.trials << " scenarios: oracle form "
                  << (fuzz.passed() ? "pass" : "FAIL") << " (" << fuzz.oracle_violations
                  << " violations), greedy form " << fuzz.greedy_violations << " violations of "
                  << fuzz.greedy_comparable << " comparable\n";
        if (!args.counterexample_dir.empty() && !fuzz.violations.empty()) {
            std::filesystem::create_directories(args.counterexample_dir);
            for (const auto& v : fuzz.violations) {
                auto path = std::filesystem::path(args.counterexample_dir) /
                            ("greedy-violation-" + std::to_string(v.trial) + ".json");
                std::ofstream(path, std::ios::binary) << vtrust::violation_to_json(v);
            }
        }
    }
    summary["passed"] = passed;
    emit(summary.dump(2) + "\n", args.output);
    return code(passed ? ExitCode::ok : ExitCode::check_failed);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Value-based trust assessment simulator"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Build the greedy trust sequence for a scenario");
    run->add_option("scenario", run_args.scenario, "Scenario JSON file")->required();
    run->add_option("--mode", run_args.mode, "Override the scenario's trust mode")
        ->check(CLI::IsMember(kModes));
    run->add_option("--format", run_args.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    run->add_flag("--check-theorem", run_args.check_theorem,
                  "Compare bold and cautious sequences on this population");
    run->add_flag("--check-props", run_args.check_props, "Run the proposition suite");
    run->add_option("--max-universe", run_args.max_universe,
                    "Largest universe enumerated by --check-props")
        ->check(CLI::Range(0, 6));
    run->add_option("--relations", run_args.relations,
                    "Opposition relations enumerated by --check-props")
        ->check(CLI::IsMember({"all", "single_opposite"}));
    run->add_option("-o,--output", run_args.output, "Write the report here instead of stdout");

    GenerateArgs gen_args;
    auto& cfg = gen_args.config;
    auto* gen = app.add_subcommand("generate", "Generate a seeded random scenario");
    gen->add_option("--seed", cfg.seed, "Generator seed")->required();
    gen->add_option("--values", cfg.n_values, "Number of values")->check(CLI::Range(1, 256));
    gen->add_option("--agents", cfg.n_agents, "Number of agents")->check(CLI::PositiveNumber);
    gen->add_option("--chain", cfg.chain_length, "Action chain length")->check(CLI::PositiveNumber);
    gen->add_option("--opposition-density", cfg.opposition_density)->check(CLI::Range(0.0, 1.0));
    gen->add_option("--value-density", cfg.value_density)->check(CLI::Range(0.0, 1.0));
    gen->add_option("--capability-density", cfg.capability_density)->check(CLI::Range(0.0, 1.0));
    gen->add_option("--mode", gen_args.mode, "Trust mode written into the scenario")
        ->check(CLI::IsMember(kModes));
    gen->add_option("-o,--output", gen_args.output, "Write the scenario here instead of stdout");
    gen->add_flag("-v,--verbose", gen_args.verbose, "Log consistency repairs to stderr");

    VerifyArgs ver_args;
    auto* ver = app.add_subcommand("verify", "Check the propositions and fuzz the bold-vs-cautious theorem");
    ver->add_flag("--check-props", ver_args.check_props, "Run the proposition suite");
    ver->add_flag("--check-theorem", ver_args.check_theorem, "Run theorem fuzzing");
    ver->add_option("--max-universe", ver_args.max_universe, "Largest enumerated universe")
        ->check(CLI::Range(0, 6));
    ver->add_option("--relations", ver_args.relations,
                    "Opposition relations to enumerate: all, or single_opposite (at most one "
                    "opposing value per value)")
        ->check(CLI::IsMember({"all", "single_opposite"}));
    ver->add_option("--trials", ver_args.fuzz.trials, "Number of fuzzed scenarios");
    ver->add_option("--seed", ver_args.fuzz.seed, "Campaign seed");
    ver->add_option("--max-agents", ver_args.fuzz.max_agents)->check(CLI::Range(2, 16));
    ver->add_option("--max-chain", ver_args.fuzz.max_chain)->check(CLI::Range(1, 6));
    ver->add_option("--max-values", ver_args.fuzz.max_values)->check(CLI::Range(1, 64));
    ver->add_option("--threads", ver_args.fuzz.threads, "Worker threads (0 = all cores)");
    ver->add_option("--counterexample-dir", ver_args.counterexample_dir,
                    "Write minimized greedy-form counterexamples here");
    ver->add_option("-o,--output", ver_args.output, "Write the JSON summary here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return code(ExitCode::usage);
    }

    try {
        if (*run) return do_run(run_args);
        if (*gen) return do_generate(gen_args);
        if (*ver) return do_verify(ver_args);
    } catch (const vtrust::ScenarioError& e) {
        std::cerr << "vtrust: " << e.what() << '\n';
        return code(ExitCode::invalid_input);
    } catch (const vtrust::GenerationError& e) {
        std::cerr << "vtrust: " << e.what() << '\n';
        return code(ExitCode::invalid_input);
    } catch (const vtrust::DomainError& e) {
        std::cerr << "vtrust: " << e.what() << '\n';
        return code(ExitCode::invalid_input);
    } catch (const std::exception& e) {
        std::cerr << "vtrust: " << e.what() << '\n';
        return code(ExitCode::usage);
    }
    return code(ExitCode::usage);
}
