#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace beliefpol::cli {

// Exit-code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadConfig = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitNotConverged = 3;
inline constexpr int kExitCheckFailed = 4;  // verify: some check failed

struct SimulateArgs {
    std::vector<std::filesystem::path> configs;
    std::optional<std::filesystem::path> output;      // single config
    std::optional<std::filesystem::path> output_dir;  // one trace per config
    std::string format = "csv";
    unsigned jobs = 1;
};

struct VerifyArgs {
    std::filesystem::path config;
    std::vector<std::string> checks;  // empty: all
    std::optional<std::filesystem::path> trace;
    std::uint64_t seed = 0;
};

struct ScenarioArgs {
    std::string name;
    std::size_t n = 100;
    std::string init = "uniform";
    std::optional<double> weight;
    std::string update = "confirmation-bias";
    std::filesystem::path output;
};

const std::vector<std::string>& known_checks();

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err);
int cmd_analyze(const std::filesystem::path& config, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_scenario(const ScenarioArgs& args, std::ostream& out, std::ostream& err);

}  // namespace beliefpol::cli
