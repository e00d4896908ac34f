#pragma once

#include "beliefpol/core.hpp"

namespace beliefpol {

/// Constants of the Esteban-Ray measure: scale K > 0 and sensitivity
/// alpha in (0,2). Defaults are the values used for the reference simulations.
class PolarizationParams {
public:
    static constexpr double kDefaultScale = 1000.0;
    static constexpr double kDefaultAlpha = 1.6;

    PolarizationParams() = default;
    PolarizationParams(double scale, double alpha);

    double scale() const { return scale_; }
    double alpha() const { return alpha_; }

private:
    double scale_ = kDefaultScale;
    double alpha_ = kDefaultAlpha;
};

/// K * sum_i sum_j pi_i^(1+alpha) * pi_j * |y_i - y_j| over all ordered pairs.
double esteban_ray(const BeliefDistribution& dist, const PolarizationParams& params);

/// Esteban-Ray measure of the configuration's distribution over `disc`.
double kbin_polarization(const BeliefConfig& config, const Discretization& disc,
                         const PolarizationParams& params);

/// True iff every belief falls in the same bin of `disc`.
bool is_zero_polarization(const BeliefConfig& config, const Discretization& disc);

}  // namespace beliefpol
