#include "beliefpol/scenarios.hpp"

#include <functional>
#include <string>

namespace beliefpol {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

double d(std::size_t v) { return static_cast<double>(v); }

void require_agents(std::size_t n, std::size_t needed, const std::string& what) {
    if (n < needed) {
        throw ModelError(what + " needs at least " + std::to_string(needed) + " agents, got " +
                         std::to_string(n));
    }
}

// Two half-open ramps of width 0.2: [low_a, low_a+0.2) over the first
// ceil(n/2) agents and [low_b, low_b+0.2) over the rest.
std::vector<double> two_groups(std::size_t n, double low_a, double low_b) {
    const std::size_t half = ceil_div(n, 2);
    std::vector<double> b(n);
    for (std::size_t i = 0; i < n; ++i) {
        b[i] = i < half ? 0.2 * d(i) / d(half) + low_a
                        : 0.2 * d(i - half) / d(n - half) + low_b;
    }
    return b;
}

std::vector<double> shaped(BeliefShape shape, std::size_t n) {
    switch (shape) {
        case BeliefShape::Uniform: {
            std::vector<double> b(n);
            for (std::size_t i = 0; i < n; ++i) b[i] = d(i) / d(n - 1);
            return b;
        }
        case BeliefShape::MildlyPolarized: return two_groups(n, 0.2, 0.6);
        case BeliefShape::ExtremelyPolarized: return two_groups(n, 0.0, 0.8);
        case BeliefShape::Tripolar: {
            const std::size_t third = n / 3;
            const std::size_t two_thirds = ceil_div(2 * n, 3);
            std::vector<double> b(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (i < third) {
                    b[i] = 0.2 * d(i) / d(third);
                } else if (i < two_thirds) {
                    b[i] = 0.2 * d(i - third) / d(two_thirds - third) + 0.4;
                } else {
                    b[i] = 0.2 * d(i - two_thirds) / d(n - two_thirds) + 0.8;
                }
            }
            return b;
        }
    }
    throw ModelError("unknown belief shape");
}

bool same_half(std::size_t i, std::size_t j, std::size_t n) {
    const std::size_t half = ceil_div(n, 2);
    return (i < half) == (j < half);
}

}  // namespace

const char* to_string(BeliefShape shape) {
    switch (shape) {
        case BeliefShape::Uniform: return "uniform";
        case BeliefShape::MildlyPolarized: return "mildly-polarized";
        case BeliefShape::ExtremelyPolarized: return "extremely-polarized";
        case BeliefShape::Tripolar: return "tripolar";
    }
    return "unknown";
}

BeliefShape belief_shape_from_name(std::string_view name) {
    for (BeliefShape s : {BeliefShape::Uniform, BeliefShape::MildlyPolarized,
                          BeliefShape::ExtremelyPolarized, BeliefShape::Tripolar}) {
        if (name == to_string(s)) return s;
    }
    throw ModelError("unknown belief preset '" + std::string(name) + "'");
}

std::size_t min_agents(const BeliefPreset& preset) {
    return std::visit(overloaded{
                          [](BeliefShape s) -> std::size_t { return s == BeliefShape::Tripolar ? 3 : 2; },
                          [](const std::vector<double>&) -> std::size_t { return 1; },
                      },
                      preset);
}

std::size_t min_agents(const GraphPreset& preset) {
    return std::visit(overloaded{
                          [](const graphs::Unrelenting&) -> std::size_t { return 3; },
                          [](const graphs::Malleable&) -> std::size_t { return 3; },
                          [](const std::vector<std::vector<double>>&) -> std::size_t { return 1; },
                          [](const auto&) -> std::size_t { return 2; },
                      },
                      preset);
}

BeliefConfig initial_beliefs(const BeliefPreset& preset, std::size_t n) {
    if (const auto* values = std::get_if<std::vector<double>>(&preset)) {
        if (values->size() != n) {
            throw ModelError("explicit beliefs list " + std::to_string(values->size()) +
                             " agents, expected " + std::to_string(n));
        }
        return BeliefConfig(*values);
    }
    const BeliefShape shape = std::get<BeliefShape>(preset);
    require_agents(n, min_agents(preset), std::string(to_string(shape)) + " beliefs");
    return BeliefConfig(shaped(shape, n));
}

InfluenceGraph influence_graph(const GraphPreset& preset, std::size_t n) {
    if (const auto* rows = std::get_if<std::vector<std::vector<double>>>(&preset)) {
        if (rows->size() != n) {
            throw ModelError("explicit influence matrix has " + std::to_string(rows->size()) +
                             " rows, expected " + std::to_string(n));
        }
        return InfluenceGraph::from_rows(*rows);
    }
    require_agents(n, min_agents(preset), graph_preset_name(preset) + " graph");

    const std::size_t last = n - 1;
    const auto off_diagonal = std::visit(
        overloaded{
            [](const graphs::Clique& c) -> std::function<double(std::size_t, std::size_t)> {
                return [w = c.weight](std::size_t, std::size_t) { return w; };
            },
            [n](const graphs::Circular& c) -> std::function<double(std::size_t, std::size_t)> {
                return [w = c.weight, n](std::size_t i, std::size_t j) {
                    return (i + 1) % n == j ? w : 0.0;
                };
            },
            [n](const graphs::Disconnected&) -> std::function<double(std::size_t, std::size_t)> {
                return [n](std::size_t i, std::size_t j) { return same_half(i, j, n) ? 0.5 : 0.0; };
            },
            [n](const graphs::Faint&) -> std::function<double(std::size_t, std::size_t)> {
                return [n](std::size_t i, std::size_t j) { return same_half(i, j, n) ? 0.5 : 0.1; };
            },
            [last](const graphs::Unrelenting&) -> std::function<double(std::size_t, std::size_t)> {
                return [last](std::size_t i, std::size_t j) {
                    if ((i == 0 && j != last) || (i == last && j != 0)) return 0.6;
                    if (j == 0 || j == last) return 0.0;
                    return 0.1;
                };
            },
            [last](const graphs::Malleable&) -> std::function<double(std::size_t, std::size_t)> {
                return [last](std::size_t i, std::size_t j) {
                    if (i == 0 && j != last) return 0.8;
                    if (i == last && j != 0) return 0.4;
                    if (j == 0 || j == last) return 0.1;
                    return 0.1;
                };
            },
            [](const std::vector<std::vector<double>>&) -> std::function<double(std::size_t, std::size_t)> {
                return {};
            },
        },
        preset);

    std::vector<double> w(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            w[i * n + j] = i == j ? 1.0 : off_diagonal(i, j);
        }
    }
    return InfluenceGraph(n, std::move(w));
}

GraphPreset graph_preset_from_name(std::string_view name, double weight) {
    if (name == "clique") return graphs::Clique{weight};
    if (name == "circular") return graphs::Circular{weight};
    if (name == "disconnected") return graphs::Disconnected{};
    if (name == "faint") return graphs::Faint{};
    if (name == "unrelenting") return graphs::Unrelenting{};
    if (name == "malleable") return graphs::Malleable{};
    throw ModelError("unknown influence preset '" + std::string(name) + "'");
}

std::string graph_preset_name(const GraphPreset& preset) {
    return std::visit(overloaded{
                          [](const graphs::Clique&) { return std::string("clique"); },
                          [](const graphs::Circular&) { return std::string("circular"); },
                          [](const graphs::Disconnected&) { return std::string("disconnected"); },
                          [](const graphs::Faint&) { return std::string("faint"); },
                          [](const graphs::Unrelenting&) { return std::string("unrelenting"); },
                          [](const graphs::Malleable&) { return std::string("malleable"); },
                          [](const std::vector<std::vector<double>>&) { return std::string("explicit"); },
                      },
                      preset);
}

NamedExample named_example(std::string_view name) {
    if (name == "vaccine") {
        return {"vaccine",
                BeliefConfig({0.0, 1.0 / 15.0, 2.0 / 15.0, 0.8, 13.0 / 15.0, 14.0 / 15.0}),
                {Discretization::equal_width(5)},
                "six agents split into two camps about vaccine safety; the influence weights "
                "must be supplied explicitly"};
    }
    if (name == "borderline") {
        return {"borderline",
                BeliefConfig({0.0, 0.2, 0.4, 0.6, 0.8, 1.0}),
                {Discretization::equal_width(2), Discretization({0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0})},
                "beliefs symmetric around the borderline point 0.5 of the two-bin "
                "discretization; supply a graph whose consensus value is 0.5"};
    }
    throw ModelError("unknown named example '" + std::string(name) + "'");
}

}  // namespace beliefpol
