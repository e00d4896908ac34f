#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "beliefpol/core.hpp"
#include "beliefpol/polarization.hpp"

namespace beliefpol {

/// 1 - |b_j - b_i|: how much an agent holding b_i heeds an opinion b_j.
double confirmation_bias_factor(double b_i, double b_j);

/// One synchronous update of every agent. Agent i moves by the average over
/// its neighbors j of factor * weight(j, i) * (b_j - b_i), where the factor is
/// the confirmation-bias factor or 1 for the classical update.
BeliefConfig step(const BeliefConfig& config, const InfluenceGraph& graph, UpdateKind kind);

struct StepRecord {
    std::size_t t = 0;
    BeliefConfig beliefs;
    double spread = 0.0;
    std::vector<double> polarization;  // one value per discretization
};

enum class SimulationStatus { Converged, MaxStepsReached };

const char* to_string(SimulationStatus status);

struct SimulationOptions {
    static constexpr std::size_t kDefaultMaxSteps = 100000;
    static constexpr double kDefaultTolerance = 1e-8;

    UpdateKind kind = UpdateKind::ConfirmationBias;
    std::size_t max_steps = kDefaultMaxSteps;
    double tolerance = kDefaultTolerance;
    std::vector<Discretization> discretizations = {Discretization::equal_width(5)};
    PolarizationParams params;
};

/// Outcome of a run without the per-step records.
struct SimulationSummary {
    SimulationStatus status = SimulationStatus::MaxStepsReached;
    /// Step t whose successor moved every agent by less than the tolerance
    /// while leaving a spread below it; set only when converged.
    std::optional<std::size_t> converged_at;
    std::size_t steps_taken = 0;
};

struct SimulationTrace {
    UpdateKind update_kind = UpdateKind::ConfirmationBias;
    SimulationStatus status = SimulationStatus::MaxStepsReached;
    std::optional<std::size_t> converged_at;
    std::vector<StepRecord> records;

    const StepRecord& final_record() const { return records.back(); }
};

using RecordSink = std::function<void(const StepRecord&)>;

/// Iterates `step` from `initial`, handing every record (t = 0 included) to
/// `sink` as it is produced. Stops once an update moves no agent by `tolerance`
/// or more and the resulting spread is below `tolerance`, or after
/// `max_steps` updates.
SimulationSummary simulate(const BeliefConfig& initial, const InfluenceGraph& graph,
                           const SimulationOptions& options, const RecordSink& sink);

SimulationTrace simulate(const BeliefConfig& initial, const InfluenceGraph& graph,
                         const SimulationOptions& options);

StepRecord make_record(std::size_t t, BeliefConfig beliefs, const SimulationOptions& options);

}  // namespace beliefpol
