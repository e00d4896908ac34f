#include "beliefpol/theory_checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace beliefpol {

std::optional<double> consensus_prediction(const InfluenceGraph& graph, const BeliefConfig& initial,
                                           UpdateKind kind) {
    if (graph.size() != initial.size()) {
        throw ModelError("configuration and graph sizes differ");
    }
    if (!is_weakly_connected(graph) || !is_regular(graph)) return std::nullopt;
    const bool applies = kind == UpdateKind::ConfirmationBias ? is_reciprocal(graph)
                                                              : is_balanced(graph);
    if (!applies) return std::nullopt;
    return initial.mean();
}

PrognosisReport prognosis(const InfluenceGraph& graph, const BeliefConfig& initial,
                          const Discretization& disc, UpdateKind kind) {
    PrognosisReport r;
    r.balanced = is_balanced(graph);
    r.weakly_connected = is_weakly_connected(graph);
    r.strongly_connected = is_strongly_connected(graph);
    r.reciprocal = is_reciprocal(graph);
    r.regular = is_regular(graph);
    r.radical = is_radical_config(initial);
    r.predicted_consensus = consensus_prediction(graph, initial, kind);
    if (r.predicted_consensus) {
        double nearest_gap = kBorderlineTolerance;
        for (double c : disc.borderlines()) {
            const double gap = std::abs(*r.predicted_consensus - c);
            if (gap < nearest_gap) {
                nearest_gap = gap;
                r.borderline_risk = c;
            }
        }
    }
    r.polarization_vanishes = r.balanced && r.weakly_connected && !r.radical &&
                              r.predicted_consensus.has_value() && !r.borderline_risk.has_value();
    return r;
}

bool check_extremal_bounds(const SimulationTrace& trace, double slack) {
    for (std::size_t k = 1; k < trace.records.size(); ++k) {
        const BeliefConfig& prev = trace.records[k - 1].beliefs;
        const double lo = prev.min() - slack;
        const double hi = prev.max() + slack;
        for (double b : trace.records[k].beliefs) {
            if (b < lo || b > hi) return false;
        }
    }
    return true;
}

bool check_monotone_extremes(const SimulationTrace& trace, double slack) {
    for (std::size_t k = 1; k < trace.records.size(); ++k) {
        const BeliefConfig& prev = trace.records[k - 1].beliefs;
        const BeliefConfig& cur = trace.records[k].beliefs;
        if (cur.max() > prev.max() + slack || cur.min() < prev.min() - slack) return false;
    }
    return true;
}

double path_bound(const BeliefConfig& at, const InfluencePath& path, double beta_min) {
    const double hops = static_cast<double>(path.size());
    const double n = static_cast<double>(at.size());
    const double top = at.max();
    const double coefficient = path.product_influence * std::pow(beta_min / n, hops);
    return top + coefficient * (at[path.agents.front()] - top);
}

bool check_path_bound(const SimulationTrace& trace, const InfluencePath& path, std::size_t t,
                      double beta_min, double slack) {
    if (!(beta_min > 0.0)) {
        throw HypothesisError("path bound needs a positive minimum confirmation-bias factor");
    }
    if (path.agents.size() < 2) {
        throw ModelError("path bound needs a path with at least one edge");
    }
    const std::size_t later = t + path.size();
    if (later >= trace.records.size()) {
        throw ModelError("trace too short for a path of " + std::to_string(path.size()) +
                         " edges from step " + std::to_string(t));
    }
    const double bound = path_bound(trace.records[t].beliefs, path, beta_min);
    return trace.records[later].beliefs[path.agents.back()] <= bound + slack;
}

PathBoundSampling sample_path_bounds(const SimulationTrace& trace, const InfluenceGraph& graph,
                                     std::size_t samples, std::uint64_t seed) {
    if (!is_strongly_connected(graph)) {
        throw HypothesisError("path bound requires a strongly connected graph");
    }
    if (trace.update_kind != UpdateKind::ConfirmationBias) {
        throw HypothesisError("path bound is stated for the confirmation-bias update");
    }
    const BeliefConfig& initial = trace.records.front().beliefs;
    if (violates_extremes_assumption(initial)) {
        throw HypothesisError("initial beliefs contain both 0 and 1");
    }
    const std::size_t n = graph.size();
    PathBoundSampling out;
    if (n < 2) return out;
    const double beta_min = min_confirmation_bias_factor(initial);
    const std::size_t last = trace.records.size() - 1;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> agent(0, n - 1);
    // Bounded number of draws: some pairs may need more steps than recorded.
    for (std::size_t draw = 0; draw < samples * 20 && out.checked < samples; ++draw) {
        const AgentId from = agent(rng);
        const AgentId to = agent(rng);
        if (from == to) continue;
        const auto path = shortest_path(graph, from, to);
        if (!path || path->size() > last) continue;
        std::uniform_int_distribution<std::size_t> when(0, last - path->size());
        const std::size_t t = when(rng);
        ++out.checked;
        if (!check_path_bound(trace, *path, t, beta_min)) ++out.violations;
    }
    return out;
}

namespace {

SimulationOptions budget_options(UpdateKind kind, const ConvergenceBudget& budget) {
    SimulationOptions options;
    options.kind = kind;
    options.max_steps = budget.max_steps;
    options.tolerance = budget.step_tolerance;
    options.discretizations.clear();
    return options;
}

}  // namespace

ConvergenceVerdict check_convergence_theorem(const InfluenceGraph& graph, const BeliefConfig& initial,
                                             UpdateKind kind, const ConvergenceBudget& budget) {
    if (!is_strongly_connected(graph)) {
        throw HypothesisError("convergence result requires a strongly connected graph");
    }
    ConvergenceVerdict v;
    v.budget = budget;
    v.radical_branch = kind == UpdateKind::ConfirmationBias && is_radical_config(initial);

    bool constant = true;
    BeliefConfig last = initial;
    const SimulationSummary summary =
        simulate(initial, graph, budget_options(kind, budget), [&](const StepRecord& rec) {
            if (rec.beliefs != initial) constant = false;
            last = rec.beliefs;
        });
    v.status = summary.status;
    v.steps = summary.steps_taken;
    v.final_spread = last.spread();
    v.passed = v.radical_branch ? constant : v.final_spread < budget.spread_tolerance;
    return v;
}

ConsensusVerdict check_consensus_value(const InfluenceGraph& graph, const BeliefConfig& initial,
                                       UpdateKind kind, const ConvergenceBudget& budget) {
    const auto predicted = consensus_prediction(graph, initial, kind);
    if (!predicted) {
        throw HypothesisError("consensus-value result does not apply to this graph and update");
    }
    ConsensusVerdict v;
    v.budget = budget;
    v.predicted = *predicted;

    BeliefConfig last = initial;
    const SimulationSummary summary = simulate(initial, graph, budget_options(kind, budget),
                                               [&](const StepRecord& rec) { last = rec.beliefs; });
    v.status = summary.status;
    v.steps = summary.steps_taken;
    v.observed_limit = last.mean();
    for (double b : last) v.max_deviation = std::max(v.max_deviation, std::abs(b - v.predicted));
    v.passed = v.max_deviation < budget.spread_tolerance;
    return v;
}

bool sum_conservation_applies(const InfluenceGraph& graph, UpdateKind kind) {
    if (!is_regular(graph)) return false;
    return kind == UpdateKind::ConfirmationBias ? is_reciprocal(graph) : is_balanced(graph);
}

SumDrift sum_drift(const SimulationTrace& trace) {
    SumDrift drift;
    if (trace.records.empty()) return drift;
    const double first = trace.records.front().beliefs.sum();
    double prev = first;
    for (std::size_t k = 1; k < trace.records.size(); ++k) {
        const double cur = trace.records[k].beliefs.sum();
        drift.max_step = std::max(drift.max_step, std::abs(cur - prev));
        prev = cur;
    }
    drift.total = std::abs(prev - first);
    return drift;
}

double degroot_discrepancy(const InfluenceGraph& graph, const StochasticMatrix& matrix,
                           const BeliefConfig& config) {
    const BeliefConfig classical = step(config, graph, UpdateKind::Classical);
    const std::vector<double> product = matrix.apply(config.values());
    double gap = 0.0;
    for (std::size_t i = 0; i < product.size(); ++i) {
        gap = std::max(gap, std::abs(classical[i] - product[i]));
    }
    return gap;
}

ZeroPolarization zero_polarization(const SimulationTrace& trace, std::size_t disc_index) {
    ZeroPolarization z;
    for (std::size_t k = 0; k < trace.records.size(); ++k) {
        const double p = trace.records[k].polarization.at(disc_index);
        if (p == 0.0) {
            if (!z.first_zero) {
                z.first_zero = trace.records[k].t;
                z.stays_zero = true;
            }
        } else if (z.first_zero) {
            z.stays_zero = false;
        }
    }
    return z;
}

}  // namespace beliefpol
