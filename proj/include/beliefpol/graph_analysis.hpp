#pragma once

// Structural predicates over influence graphs and belief configurations,
// plus the reduction of the classical update to a row-stochastic matrix.

#include <optional>
#include <span>
#include <vector>

#include "beliefpol/core.hpp"

namespace beliefpol {

/// Sequence of distinct agents where each one directly influences the next.
struct InfluencePath {
    std::vector<AgentId> agents;
    /// Product of the edge weights along the path.
    double product_influence = 1.0;

    /// Number of edges.
    std::size_t size() const { return agents.empty() ? 0 : agents.size() - 1; }
};

/// Component id per agent (ids are dense, 0-based) for the directed graph of
/// positive off-diagonal influences.
std::vector<std::size_t> strongly_connected_components(const InfluenceGraph& graph);

bool is_strongly_connected(const InfluenceGraph& graph);
bool is_weakly_connected(const InfluenceGraph& graph);

inline constexpr double kDefaultBalanceTolerance = 1e-9;

/// Every agent's total outgoing influence matches its total incoming influence.
bool is_balanced(const InfluenceGraph& graph, double tol = kDefaultBalanceTolerance);

struct GroupFlow {
    double out = 0.0;  // influence leaving the group
    double in = 0.0;   // influence entering the group
};

/// Influence crossing the cut around `group`; the group must be a non-empty
/// proper subset of the agents.
GroupFlow group_flow(const InfluenceGraph& graph, std::span<const AgentId> group);

bool is_reciprocal(const InfluenceGraph& graph);
/// All agents have neighbor sets of equal size (in-degree regularity).
bool is_regular(const InfluenceGraph& graph);

bool is_radical_config(const BeliefConfig& config);
/// Some agent believes 0 while another believes 1.
bool violates_extremes_assumption(const BeliefConfig& config);

/// Smallest positive off-diagonal influence; 1 when only self-loops exist.
double min_positive_influence(const InfluenceGraph& graph);
/// Minimum confirmation-bias factor over all agent pairs, i.e. 1 - spread.
double min_confirmation_bias_factor(const BeliefConfig& config);

/// Row-stochastic matrix with strictly positive diagonal.
class StochasticMatrix {
public:
    static constexpr double kRowSumTolerance = 1e-12;

    StochasticMatrix(std::size_t n, std::vector<double> entries);

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    /// Matrix-vector product, accumulated in ascending column order.
    std::vector<double> apply(std::span<const double> v) const;

private:
    std::size_t n_;
    std::vector<double> entries_;
};

/// T(i,j) = weight(j,i) / |A_i| off the diagonal; the diagonal completes each
/// row to 1. One classical update equals multiplication by T.
StochasticMatrix degroot_matrix(const InfluenceGraph& graph);

bool influence_path_exists(const InfluenceGraph& graph, AgentId from, AgentId to);

/// Shortest path by edge count; among equally short paths, the one choosing
/// the smallest next agent at every hop.
std::optional<InfluencePath> shortest_path(const InfluenceGraph& graph, AgentId from, AgentId to);

}  // namespace beliefpol
