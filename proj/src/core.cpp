#include "beliefpol/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace beliefpol {

namespace {

std::string describe(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

const char* to_string(UpdateKind kind) {
    switch (kind) {
        case UpdateKind::ConfirmationBias: return "confirmation-bias";
        case UpdateKind::Classical: return "classical";
    }
    return "unknown";
}

BeliefConfig::BeliefConfig(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw ModelError("belief configuration needs at least one agent");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const double b = values_[i];
        if (!(b >= 0.0 && b <= 1.0)) {
            throw ModelError("belief of agent " + std::to_string(i) + " is " + describe(b) +
                             ", outside [0,1]");
        }
    }
}

double BeliefConfig::min() const { return *std::min_element(values_.begin(), values_.end()); }

double BeliefConfig::max() const { return *std::max_element(values_.begin(), values_.end()); }

double BeliefConfig::spread() const {
    const auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
    return *hi - *lo;
}

double BeliefConfig::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

double BeliefConfig::mean() const { return sum() / static_cast<double>(values_.size()); }

InfluenceGraph::InfluenceGraph(std::size_t n, std::vector<double> weights)
    : n_(n), weights_(std::move(weights)) {
    if (n_ == 0) {
        throw ModelError("influence graph needs at least one agent");
    }
    if (weights_.size() != n_ * n_) {
        throw ModelError("influence matrix has " + std::to_string(weights_.size()) +
                         " entries, expected " + std::to_string(n_ * n_));
    }
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const double w = weights_[i * n_ + j];
            if (!(w >= 0.0 && w <= 1.0)) {
                throw ModelError("influence " + std::to_string(i) + "->" + std::to_string(j) +
                                 " is " + describe(w) + ", outside [0,1]");
            }
            if (i == j && w != 1.0) {
                throw ModelError("self-influence of agent " + std::to_string(i) + " is " +
                                 describe(w) + ", must be 1");
            }
        }
    }
    in_edges_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const double w = weights_[j * n_ + i];
            if (w > 0.0) in_edges_[i].push_back({j, w});
        }
    }
}

InfluenceGraph InfluenceGraph::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw ModelError("influence matrix row " + std::to_string(i) + " has " +
                             std::to_string(rows[i].size()) + " entries, expected " +
                             std::to_string(n));
        }
        flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    }
    return InfluenceGraph(n, std::move(flat));
}

InfluenceGraph InfluenceGraph::identity(std::size_t n) {
    std::vector<double> w(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) w[i * n + i] = 1.0;
    return InfluenceGraph(n, std::move(w));
}

std::vector<std::vector<double>> InfluenceGraph::rows() const {
    std::vector<std::vector<double>> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        out[i].assign(weights_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                      weights_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
    }
    return out;
}

std::vector<AgentId> neighbors(const InfluenceGraph& graph, AgentId i) {
    if (i >= graph.size()) {
        throw ModelError("agent " + std::to_string(i) + " out of range for " +
                         std::to_string(graph.size()) + " agents");
    }
    std::vector<AgentId> out;
    for (const InEdge& e : graph.in_edges(i)) out.push_back(e.source);
    return out;
}

Discretization::Discretization(std::vector<double> boundaries) : boundaries_(std::move(boundaries)) {
    if (boundaries_.size() < 2) {
        throw ModelError("discretization needs at least one bin");
    }
    if (boundaries_.front() != 0.0 || boundaries_.back() != 1.0) {
        throw ModelError("discretization must start at 0 and end at 1");
    }
    for (std::size_t m = 1; m < boundaries_.size(); ++m) {
        if (!(boundaries_[m] > boundaries_[m - 1])) {
            throw ModelError("discretization boundaries must be strictly increasing (index " +
                             std::to_string(m) + ")");
        }
    }
}

Discretization Discretization::equal_width(std::size_t bins) {
    if (bins == 0) {
        throw ModelError("discretization needs at least one bin");
    }
    std::vector<double> b(bins + 1);
    for (std::size_t m = 0; m <= bins; ++m) {
        b[m] = static_cast<double>(m) / static_cast<double>(bins);
    }
    return Discretization(std::move(b));
}

std::span<const double> Discretization::borderlines() const {
    return std::span<const double>(boundaries_).subspan(1, boundaries_.size() - 2);
}

double Discretization::midpoint(std::size_t bin) const {
    return (boundaries_[bin] + boundaries_[bin + 1]) / 2.0;
}

std::size_t Discretization::bin_index(double v) const {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ModelError("value " + describe(v) + " outside [0,1]");
    }
    // First boundary strictly greater than v closes v's bin from above.
    const auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), v);
    const auto m = static_cast<std::size_t>(it - boundaries_.begin());
    return std::min(m - 1, bin_count() - 1);
}

BeliefDistribution belief_distribution(const BeliefConfig& config, const Discretization& disc) {
    const std::size_t k = disc.bin_count();
    std::vector<std::size_t> counts(k, 0);
    for (double b : config) ++counts[disc.bin_index(b)];

    BeliefDistribution dist;
    dist.weights.resize(k);
    dist.values.resize(k);
    const auto n = static_cast<double>(config.size());
    for (std::size_t m = 0; m < k; ++m) {
        dist.weights[m] = static_cast<double>(counts[m]) / n;
        dist.values[m] = disc.midpoint(m);
    }
    return dist;
}

}  // namespace beliefpol
