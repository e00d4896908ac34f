#include "beliefpol/update.hpp"

#include <cassert>
#include <cmath>

namespace beliefpol {

double confirmation_bias_factor(double b_i, double b_j) { return 1.0 - std::abs(b_j - b_i); }

BeliefConfig step(const BeliefConfig& config, const InfluenceGraph& graph, UpdateKind kind) {
    const std::size_t n = config.size();
    if (graph.size() != n) {
        throw ModelError("configuration has " + std::to_string(n) + " agents but graph has " +
                         std::to_string(graph.size()));
    }
    std::vector<double> next(n);
    for (AgentId i = 0; i < n; ++i) {
        const double b_i = config[i];
        const auto in = graph.in_edges(i);
        double correction = 0.0;
        for (const InEdge& e : in) {
            const double b_j = config[e.source];
            const double factor =
                kind == UpdateKind::ConfirmationBias ? confirmation_bias_factor(b_i, b_j) : 1.0;
            correction += factor * e.weight * (b_j - b_i);
        }
        next[i] = b_i + correction / static_cast<double>(in.size());
        assert(next[i] >= 0.0 && next[i] <= 1.0);
    }
    return BeliefConfig(std::move(next));
}

const char* to_string(SimulationStatus status) {
    switch (status) {
        case SimulationStatus::Converged: return "converged";
        case SimulationStatus::MaxStepsReached: return "max-steps-reached";
    }
    return "unknown";
}

StepRecord make_record(std::size_t t, BeliefConfig beliefs, const SimulationOptions& options) {
    StepRecord rec{t, std::move(beliefs), 0.0, {}};
    rec.spread = rec.beliefs.spread();
    rec.polarization.reserve(options.discretizations.size());
    for (const Discretization& disc : options.discretizations) {
        rec.polarization.push_back(kbin_polarization(rec.beliefs, disc, options.params));
    }
    return rec;
}

SimulationSummary simulate(const BeliefConfig& initial, const InfluenceGraph& graph,
                           const SimulationOptions& options, const RecordSink& sink) {
    if (!(options.tolerance > 0.0)) {
        throw ModelError("simulation tolerance must be positive");
    }
    if (graph.size() != initial.size()) {
        throw ModelError("configuration has " + std::to_string(initial.size()) +
                         " agents but graph has " + std::to_string(graph.size()));
    }
    SimulationSummary summary;
    BeliefConfig current = initial;
    sink(make_record(0, current, options));
    for (std::size_t t = 0; t < options.max_steps; ++t) {
        BeliefConfig next = step(current, graph, options.kind);
        double movement = 0.0;
        for (AgentId i = 0; i < next.size(); ++i) {
            movement = std::max(movement, std::abs(next[i] - current[i]));
        }
        StepRecord rec = make_record(t + 1, next, options);
        const bool settled = movement < options.tolerance && rec.spread < options.tolerance;
        sink(rec);
        current = std::move(next);
        summary.steps_taken = t + 1;
        if (settled) {
            summary.status = SimulationStatus::Converged;
            summary.converged_at = t;
            return summary;
        }
    }
    summary.status = SimulationStatus::MaxStepsReached;
    return summary;
}

SimulationTrace simulate(const BeliefConfig& initial, const InfluenceGraph& graph,
                         const SimulationOptions& options) {
    SimulationTrace trace;
    trace.update_kind = options.kind;
    const SimulationSummary summary =
        simulate(initial, graph, options, [&](const StepRecord& rec) { trace.records.push_back(rec); });
    trace.status = summary.status;
    trace.converged_at = summary.converged_at;
    return trace;
}

}  // namespace beliefpol
