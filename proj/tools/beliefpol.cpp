// beliefpol: simulate belief dynamics under confirmation bias, analyze influence
// graphs and check the convergence results against simulated or recorded traces.

#include <iostream>

#include "CLI11.hpp"

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace beliefpol::cli;

    CLI::App app{"Belief dynamics and Esteban-Ray polarization"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Run a scenario and write its trace");
    simulate->add_option("configs", sim.configs, "Scenario config file(s)")->required();
    auto* out_opt = simulate->add_option("-o,--output", sim.output, "Trace file (single config)");
    simulate->add_option("--output-dir", sim.output_dir, "Directory for one trace per config")
        ->check(CLI::ExistingDirectory)
        ->excludes(out_opt);
    simulate->add_option("--format", sim.format, "Trace format")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();
    simulate->add_option("-j,--jobs", sim.jobs, "Worker threads across configs")->capture_default_str();

    std::filesystem::path analyze_config;
    auto* analyze = app.add_subcommand("analyze", "Print structural predicates and the prognosis as JSON");
    analyze->add_option("config", analyze_config, "Scenario config file")->required();

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Check the convergence results on a scenario");
    verify->add_option("config", ver.config, "Scenario config file")->required();
    verify->add_option("-c,--check", ver.checks, "Check to run (repeatable; default all)")
        ->check(CLI::IsMember(known_checks()));
    verify->add_option("--trace", ver.trace, "Replay a CSV trace instead of simulating");
    verify->add_option("--seed", ver.seed, "Seed for path-bound sampling")->capture_default_str();

    ScenarioArgs scen;
    auto* scenario = app.add_subcommand("scenario", "Emit a scenario config");
    scenario
        ->add_option("name", scen.name,
                     "Influence preset (clique, circular, disconnected, faint, unrelenting, malleable) "
                     "or named example (vaccine, borderline)")
        ->required();
    scenario->add_option("-n,--agents", scen.n, "Number of agents")->capture_default_str();
    scenario->add_option("--init", scen.init, "Initial beliefs preset")->capture_default_str();
    scenario->add_option("--weight", scen.weight, "Edge weight for clique and circular presets");
    scenario->add_option("--update", scen.update, "confirmation-bias or classical")->capture_default_str();
    scenario->add_option("-o,--emit", scen.output, "Output path ('-' for standard output)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitBadConfig;
    }

    if (simulate->parsed()) return cmd_simulate(sim, std::cout, std::cerr);
    if (analyze->parsed()) return cmd_analyze(analyze_config, std::cout, std::cerr);
    if (verify->parsed()) return cmd_verify(ver, std::cout, std::cerr);
    return cmd_scenario(scen, std::cout, std::cerr);
}
