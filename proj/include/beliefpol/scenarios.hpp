#pragma once

// Generators for the reference initial belief configurations and influence
// topologies, and the small named examples with caption-given beliefs.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "beliefpol/core.hpp"

namespace beliefpol {

enum class BeliefShape { Uniform, MildlyPolarized, ExtremelyPolarized, Tripolar };

using BeliefPreset = std::variant<BeliefShape, std::vector<double>>;

namespace graphs {
struct Clique { double weight = 0.5; };
struct Circular { double weight = 0.5; };
struct Disconnected {};
struct Faint {};
struct Unrelenting {};
struct Malleable {};
}  // namespace graphs

using GraphPreset = std::variant<graphs::Clique, graphs::Circular, graphs::Disconnected,
                                 graphs::Faint, graphs::Unrelenting, graphs::Malleable,
                                 std::vector<std::vector<double>>>;

const char* to_string(BeliefShape shape);
/// Accepts "uniform", "mildly-polarized", "extremely-polarized", "tripolar".
BeliefShape belief_shape_from_name(std::string_view name);

/// Minimum agent count a preset needs.
std::size_t min_agents(const BeliefPreset& preset);
std::size_t min_agents(const GraphPreset& preset);

BeliefConfig initial_beliefs(const BeliefPreset& preset, std::size_t n);

/// Builds the n-agent graph; piecewise definitions are evaluated clause by
/// clause in their listed order and the diagonal is set to 1 afterwards.
InfluenceGraph influence_graph(const GraphPreset& preset, std::size_t n);

/// Preset graph by name ("clique", "circular", "disconnected", "faint",
/// "unrelenting", "malleable"). `weight` applies to clique and circular only.
GraphPreset graph_preset_from_name(std::string_view name, double weight = 0.5);
std::string graph_preset_name(const GraphPreset& preset);

struct NamedExample {
    std::string name;
    BeliefConfig beliefs;
    std::vector<Discretization> discretizations;
    std::string notes;
};

/// "vaccine" or "borderline". Influence weights are not part of either
/// example and must be supplied by the caller.
NamedExample named_example(std::string_view name);

}  // namespace beliefpol
