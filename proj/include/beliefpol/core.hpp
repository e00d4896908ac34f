#pragma once

// Shared domain types: belief configurations, influence graphs,
// discretizations of [0,1] and the belief distribution built from them.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace beliefpol {

/// Raised when a value violates a model invariant (beliefs outside [0,1],
/// malformed graphs or discretizations, mismatched dimensions).
class ModelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using AgentId = std::size_t;

enum class UpdateKind { ConfirmationBias, Classical };

const char* to_string(UpdateKind kind);

/// Beliefs of n >= 1 agents in a single proposition, each in [0,1].
class BeliefConfig {
public:
    explicit BeliefConfig(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    double operator[](AgentId i) const { return values_[i]; }
    std::span<const double> values() const { return values_; }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    double min() const;
    double max() const;
    /// max - min
    double spread() const;
    double mean() const;
    double sum() const;

    friend bool operator==(const BeliefConfig&, const BeliefConfig&) = default;

private:
    std::vector<double> values_;
};

/// A positive entry of an influence column: agent `source` influences the
/// agent owning the column with `weight` > 0.
struct InEdge {
    AgentId source;
    double weight;
};

/// Dense n x n influence matrix; weight(i, j) is the influence of i on j.
/// Entries lie in [0,1] and every agent is self-confident (unit diagonal).
class InfluenceGraph {
public:
    /// Row-major weights, weights[i * n + j] = influence of i on j.
    InfluenceGraph(std::size_t n, std::vector<double> weights);
    static InfluenceGraph from_rows(const std::vector<std::vector<double>>& rows);
    /// Graph with only self-loops.
    static InfluenceGraph identity(std::size_t n);

    std::size_t size() const { return n_; }
    double weight(AgentId from, AgentId to) const { return weights_[from * n_ + to]; }

    /// Agents j with weight(j, i) > 0 in ascending order (always contains i).
    std::span<const InEdge> in_edges(AgentId i) const { return in_edges_[i]; }

    std::vector<std::vector<double>> rows() const;

    friend bool operator==(const InfluenceGraph& a, const InfluenceGraph& b) {
        return a.n_ == b.n_ && a.weights_ == b.weights_;
    }

private:
    std::size_t n_;
    std::vector<double> weights_;
    std::vector<std::vector<InEdge>> in_edges_;
};

/// Neighbor set A_i = { j : weight(j, i) > 0 }, ascending.
std::vector<AgentId> neighbors(const InfluenceGraph& graph, AgentId i);

/// Ordered partition of [0,1] into k bins. Bin m is [c_m, c_{m+1}) except the
/// last one, which is closed: [c_{k-1}, 1].
class Discretization {
public:
    explicit Discretization(std::vector<double> boundaries);
    static Discretization equal_width(std::size_t bins);

    std::size_t bin_count() const { return boundaries_.size() - 1; }
    std::span<const double> boundaries() const { return boundaries_; }
    /// Interior endpoints c_1 .. c_{k-1}.
    std::span<const double> borderlines() const;
    double midpoint(std::size_t bin) const;

    /// Throws ModelError when v is outside [0,1].
    std::size_t bin_index(double v) const;

    friend bool operator==(const Discretization&, const Discretization&) = default;

private:
    std::vector<double> boundaries_;
};

struct BeliefDistribution {
    std::vector<double> weights;  // fraction of agents per bin
    std::vector<double> values;   // bin midpoints
};

BeliefDistribution belief_distribution(const BeliefConfig& config, const Discretization& disc);

}  // namespace beliefpol
