#pragma once

// Scenario configuration files (JSON). A config names presets or carries
// explicit data; `resolve` turns it into model objects.
//
// {
//   "schema_version": 1,
//   "n": 100,
//   "beliefs": "uniform" | [b_0, ..., b_{n-1}],
//   "influence": "clique" | {"preset": "clique", "weight": 0.5}
//              | {"matrix": [[...], ...]} | {"edges": [[i, j, w], ...]},
//   "update": "confirmation-bias" | "classical",
//   "max_steps": 100000,
//   "tolerance": 1e-08,
//   "polarization": {"K": 1000, "alpha": 1.6, "discretizations": [5, [0, 0.5, 1]]},
//   "notes": "..."            (optional)
// }

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "beliefpol/core.hpp"
#include "beliefpol/update.hpp"

namespace beliefpol {

inline constexpr int kSchemaVersion = 1;
/// Largest agent count accepted for a dense "matrix" influence entry.
inline constexpr std::size_t kMaxExplicitMatrixAgents = 64;

/// Malformed configuration; `path()` locates the offending field, e.g.
/// "$.beliefs[2]".
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string path, const std::string& message)
        : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Reading or writing a file failed.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PresetInfluence {
    std::string name;
    std::optional<double> weight;  // clique and circular only
};

/// Dense rows; a null entry is a placeholder the user still has to fill in.
struct MatrixInfluence {
    std::vector<std::vector<std::optional<double>>> rows;
};

struct WeightedEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    double weight = 0.0;
};

/// Self-loops are implicit; unlisted pairs have weight 0.
struct EdgeListInfluence {
    std::vector<WeightedEdge> edges;
};

using InfluenceSpec = std::variant<PresetInfluence, MatrixInfluence, EdgeListInfluence>;
using BeliefSpec = std::variant<std::string, std::vector<double>>;
using DiscretizationSpec = std::variant<std::size_t, std::vector<double>>;

struct ScenarioConfig {
    int schema_version = kSchemaVersion;
    std::size_t n = 0;
    BeliefSpec beliefs = std::string("uniform");
    InfluenceSpec influence = PresetInfluence{"clique", std::nullopt};
    UpdateKind update = UpdateKind::ConfirmationBias;
    std::size_t max_steps = SimulationOptions::kDefaultMaxSteps;
    double tolerance = SimulationOptions::kDefaultTolerance;
    double scale = PolarizationParams::kDefaultScale;
    double alpha = PolarizationParams::kDefaultAlpha;
    std::vector<DiscretizationSpec> discretizations = {std::size_t{5}};
    std::string notes;
};

struct ResolvedScenario {
    BeliefConfig beliefs;
    InfluenceGraph graph;
    SimulationOptions options;
};

/// Parses JSON text; unknown fields and malformed values raise ConfigError.
ScenarioConfig parse_config(std::string_view text);
/// Canonical rendering (fixed key order, two-space indent, trailing newline).
std::string emit_config(const ScenarioConfig& config);

ScenarioConfig load_config(const std::filesystem::path& path);
void save_config(const ScenarioConfig& config, const std::filesystem::path& path);

/// Builds the model objects; every model invariant violation is reported as a
/// ConfigError carrying the field path.
ResolvedScenario resolve(const ScenarioConfig& config);

UpdateKind update_kind_from_name(std::string_view name);

}  // namespace beliefpol
