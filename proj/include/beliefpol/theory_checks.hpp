#pragma once

// Executable versions of the convergence and polarization results: trace
// verifiers, the consensus-value predictor and the polarization prognosis.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "beliefpol/core.hpp"
#include "beliefpol/graph_analysis.hpp"
#include "beliefpol/update.hpp"

namespace beliefpol {

/// The hypotheses of the result being checked do not hold for the input.
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kTraceSlack = 1e-12;
inline constexpr double kBorderlineTolerance = 1e-6;

struct PrognosisReport {
    bool balanced = false;
    bool weakly_connected = false;
    bool strongly_connected = false;
    bool reciprocal = false;
    bool regular = false;
    bool radical = false;
    /// Mean of the initial beliefs, present when the consensus-value result applies.
    std::optional<double> predicted_consensus;
    /// Borderline point within kBorderlineTolerance of the predicted consensus.
    std::optional<double> borderline_risk;
    /// Balanced, weakly connected, not radical and converging to a known
    /// non-borderline value: polarization has to vanish.
    bool polarization_vanishes = false;
};

/// Consensus value when the graph is weakly connected and regular and either
/// reciprocal under confirmation bias or balanced under the classical update.
std::optional<double> consensus_prediction(const InfluenceGraph& graph, const BeliefConfig& initial,
                                           UpdateKind kind);

PrognosisReport prognosis(const InfluenceGraph& graph, const BeliefConfig& initial,
                          const Discretization& disc, UpdateKind kind);

/// min^t <= b_i^{t+1} <= max^t for every agent and step.
bool check_extremal_bounds(const SimulationTrace& trace, double slack = kTraceSlack);
/// max^{t+1} <= max^t and min^{t+1} >= min^t for every step.
bool check_monotone_extremes(const SimulationTrace& trace, double slack = kTraceSlack);

/// Upper bound on the belief of the path's last agent |p| steps after `at`:
/// max + C * beta_min^|p| / n^|p| * (b_first - max).
double path_bound(const BeliefConfig& at, const InfluencePath& path, double beta_min);

/// Checks the path bound from record t of a confirmation-bias trace. Throws
/// HypothesisError when beta_min is not positive and ModelError when the
/// trace is too short for the path.
bool check_path_bound(const SimulationTrace& trace, const InfluencePath& path, std::size_t t,
                      double beta_min, double slack = kTraceSlack);

struct PathBoundSampling {
    std::size_t checked = 0;
    std::size_t violations = 0;
};

/// Checks up to `samples` random (path, t) pairs drawn with a fixed seed.
/// Requires a strongly connected graph and a trace whose initial beliefs do
/// not contain both 0 and 1.
PathBoundSampling sample_path_bounds(const SimulationTrace& trace, const InfluenceGraph& graph,
                                     std::size_t samples = 200, std::uint64_t seed = 0);

struct ConvergenceBudget {
    std::size_t max_steps = 100000;
    double step_tolerance = SimulationOptions::kDefaultTolerance;
    double spread_tolerance = 1e-6;
};

struct ConvergenceVerdict {
    bool passed = false;
    bool radical_branch = false;
    SimulationStatus status = SimulationStatus::MaxStepsReached;
    std::size_t steps = 0;
    double final_spread = 0.0;
    ConvergenceBudget budget;
};

/// On a strongly connected graph beliefs reach consensus unless the initial
/// configuration is radical, in which case it never changes. Throws
/// HypothesisError for graphs that are not strongly connected.
ConvergenceVerdict check_convergence_theorem(const InfluenceGraph& graph, const BeliefConfig& initial,
                                             UpdateKind kind, const ConvergenceBudget& budget = {});

struct ConsensusVerdict {
    bool passed = false;
    double predicted = 0.0;
    double observed_limit = 0.0;
    double max_deviation = 0.0;
    SimulationStatus status = SimulationStatus::MaxStepsReached;
    std::size_t steps = 0;
    ConvergenceBudget budget;
};

/// Every final belief lies within budget.spread_tolerance of the initial
/// mean. Throws HypothesisError when no consensus value is predicted.
ConsensusVerdict check_consensus_value(const InfluenceGraph& graph, const BeliefConfig& initial,
                                       UpdateKind kind, const ConvergenceBudget& budget = {});

/// Whether the sum of beliefs is invariant under the update on this graph.
bool sum_conservation_applies(const InfluenceGraph& graph, UpdateKind kind);

struct SumDrift {
    double max_step = 0.0;  // largest |sum^{t+1} - sum^t|
    double total = 0.0;     // |sum^final - sum^0|
};

SumDrift sum_drift(const SimulationTrace& trace);

/// Largest componentwise gap between the classical update and the DeGroot
/// matrix product for one configuration.
double degroot_discrepancy(const InfluenceGraph& graph, const StochasticMatrix& matrix,
                           const BeliefConfig& config);

struct ZeroPolarization {
    std::optional<std::size_t> first_zero;  // first record with polarization exactly 0
    bool stays_zero = false;                // and every later record too
};

ZeroPolarization zero_polarization(const SimulationTrace& trace, std::size_t disc_index);

}  // namespace beliefpol
