#include "beliefpol/graph_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

namespace beliefpol {

namespace {

void check_agent(const InfluenceGraph& graph, AgentId i) {
    if (i >= graph.size()) {
        throw ModelError("agent " + std::to_string(i) + " out of range for " +
                         std::to_string(graph.size()) + " agents");
    }
}

bool has_edge(const InfluenceGraph& graph, AgentId from, AgentId to) {
    return from != to && graph.weight(from, to) > 0.0;
}

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

// Hop distance from every agent to `target` along positive edges.
std::vector<std::size_t> distances_to(const InfluenceGraph& graph, AgentId target) {
    constexpr auto unreached = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(graph.size(), unreached);
    std::queue<AgentId> frontier;
    dist[target] = 0;
    frontier.push(target);
    while (!frontier.empty()) {
        const AgentId v = frontier.front();
        frontier.pop();
        for (const InEdge& e : graph.in_edges(v)) {
            if (e.source != v && dist[e.source] == unreached) {
                dist[e.source] = dist[v] + 1;
                frontier.push(e.source);
            }
        }
    }
    return dist;
}

}  // namespace

std::vector<std::size_t> strongly_connected_components(const InfluenceGraph& graph) {
    // Iterative Tarjan.
    const std::size_t n = graph.size();
    constexpr auto unvisited = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> index(n, unvisited), low(n, 0), component(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<AgentId> stack;
    std::vector<std::pair<AgentId, AgentId>> call;  // (vertex, next successor to inspect)
    std::size_t counter = 0;
    std::size_t components = 0;

    for (AgentId root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call.empty()) {
            auto& [v, next] = call.back();
            bool descended = false;
            while (next < n) {
                const AgentId w = next++;
                if (!has_edge(graph, v, w)) continue;
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;

            const AgentId done = v;
            if (low[done] == index[done]) {
                AgentId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component[w] = components;
                } while (w != done);
                ++components;
            }
            call.pop_back();
            if (!call.empty()) {
                const AgentId parent = call.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
        }
    }
    return component;
}

bool is_strongly_connected(const InfluenceGraph& graph) {
    const auto comp = strongly_connected_components(graph);
    return std::all_of(comp.begin(), comp.end(), [&](std::size_t c) { return c == comp[0]; });
}

bool is_weakly_connected(const InfluenceGraph& graph) {
    const std::size_t n = graph.size();
    DisjointSets sets(n);
    std::size_t groups = n;
    for (AgentId i = 0; i < n; ++i) {
        for (AgentId j = i + 1; j < n; ++j) {
            if ((has_edge(graph, i, j) || has_edge(graph, j, i)) && sets.unite(i, j)) --groups;
        }
    }
    return groups == 1;
}

bool is_balanced(const InfluenceGraph& graph, double tol) {
    const std::size_t n = graph.size();
    for (AgentId i = 0; i < n; ++i) {
        double out = 0.0;
        double in = 0.0;
        for (AgentId j = 0; j < n; ++j) {
            out += graph.weight(i, j);
            in += graph.weight(j, i);
        }
        if (std::abs(out - in) > tol) return false;
    }
    return true;
}

GroupFlow group_flow(const InfluenceGraph& graph, std::span<const AgentId> group) {
    const std::size_t n = graph.size();
    std::vector<bool> member(n, false);
    std::size_t members = 0;
    for (AgentId a : group) {
        check_agent(graph, a);
        if (!member[a]) {
            member[a] = true;
            ++members;
        }
    }
    if (members == 0 || members == n) {
        throw ModelError("group must be a non-empty proper subset of the agents");
    }
    GroupFlow flow;
    for (AgentId i = 0; i < n; ++i) {
        if (!member[i]) continue;
        for (AgentId j = 0; j < n; ++j) {
            if (member[j]) continue;
            flow.out += graph.weight(i, j);
            flow.in += graph.weight(j, i);
        }
    }
    return flow;
}

bool is_reciprocal(const InfluenceGraph& graph) {
    const std::size_t n = graph.size();
    for (AgentId i = 0; i < n; ++i) {
        for (AgentId j = i + 1; j < n; ++j) {
            if (graph.weight(i, j) != graph.weight(j, i)) return false;
        }
    }
    return true;
}

bool is_regular(const InfluenceGraph& graph) {
    const std::size_t degree = graph.in_edges(0).size();
    for (AgentId i = 1; i < graph.size(); ++i) {
        if (graph.in_edges(i).size() != degree) return false;
    }
    return true;
}

bool is_radical_config(const BeliefConfig& config) {
    return std::all_of(config.begin(), config.end(), [](double b) { return b == 0.0 || b == 1.0; });
}

bool violates_extremes_assumption(const BeliefConfig& config) {
    return config.min() == 0.0 && config.max() == 1.0;
}

double min_positive_influence(const InfluenceGraph& graph) {
    double best = 1.0;
    for (AgentId i = 0; i < graph.size(); ++i) {
        for (const InEdge& e : graph.in_edges(i)) {
            if (e.source != i) best = std::min(best, e.weight);
        }
    }
    return best;
}

double min_confirmation_bias_factor(const BeliefConfig& config) { return 1.0 - config.spread(); }

StochasticMatrix::StochasticMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n_ * n_) {
        throw ModelError("stochastic matrix has the wrong number of entries");
    }
    for (std::size_t i = 0; i < n_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n_; ++j) {
            const double v = entries_[i * n_ + j];
            if (!(v >= 0.0)) {
                throw ModelError("stochastic matrix entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") is negative");
            }
            row += v;
        }
        if (std::abs(row - 1.0) > kRowSumTolerance) {
            throw ModelError("stochastic matrix row " + std::to_string(i) + " does not sum to 1");
        }
        if (!(entries_[i * n_ + i] > 0.0)) {
            throw ModelError("stochastic matrix diagonal entry " + std::to_string(i) +
                             " is not positive");
        }
    }
}

std::vector<double> StochasticMatrix::apply(std::span<const double> v) const {
    if (v.size() != n_) {
        throw ModelError("vector length does not match stochastic matrix");
    }
    std::vector<double> out(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n_; ++j) acc += entries_[i * n_ + j] * v[j];
        out[i] = acc;
    }
    return out;
}

StochasticMatrix degroot_matrix(const InfluenceGraph& graph) {
    const std::size_t n = graph.size();
    std::vector<double> t(n * n, 0.0);
    for (AgentId i = 0; i < n; ++i) {
        const auto in = graph.in_edges(i);
        const auto degree = static_cast<double>(in.size());
        double off_diagonal = 0.0;
        for (const InEdge& e : in) {
            if (e.source == i) continue;
            t[i * n + e.source] = e.weight / degree;
            off_diagonal += e.weight / degree;
        }
        t[i * n + i] = 1.0 - off_diagonal;
    }
    return StochasticMatrix(n, std::move(t));
}

bool influence_path_exists(const InfluenceGraph& graph, AgentId from, AgentId to) {
    return shortest_path(graph, from, to).has_value();
}

std::optional<InfluencePath> shortest_path(const InfluenceGraph& graph, AgentId from, AgentId to) {
    check_agent(graph, from);
    check_agent(graph, to);
    if (from == to) {
        throw ModelError("influence path endpoints must differ");
    }
    const auto dist = distances_to(graph, to);
    if (dist[from] == std::numeric_limits<std::size_t>::max()) return std::nullopt;

    InfluencePath path;
    path.agents.push_back(from);
    AgentId at = from;
    while (at != to) {
        for (AgentId next = 0; next < graph.size(); ++next) {
            if (has_edge(graph, at, next) && dist[next] + 1 == dist[at]) {
                path.product_influence *= graph.weight(at, next);
                path.agents.push_back(next);
                at = next;
                break;
            }
        }
    }
    return path;
}

}  // namespace beliefpol
