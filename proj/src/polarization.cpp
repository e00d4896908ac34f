#include "beliefpol/polarization.hpp"

#include <cmath>

namespace beliefpol {

PolarizationParams::PolarizationParams(double scale, double alpha) : scale_(scale), alpha_(alpha) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw ModelError("polarization scale K must be positive and finite");
    }
    if (!(alpha > 0.0 && alpha < 2.0)) {
        throw ModelError("polarization alpha must lie in (0,2)");
    }
}

double esteban_ray(const BeliefDistribution& dist, const PolarizationParams& params) {
    if (dist.weights.size() != dist.values.size()) {
        throw ModelError("distribution weights and values differ in length");
    }
    const std::size_t k = dist.weights.size();
    const double exponent = 1.0 + params.alpha();
    double total = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double lead = std::pow(dist.weights[i], exponent);
        for (std::size_t j = 0; j < k; ++j) {
            total += lead * dist.weights[j] * std::abs(dist.values[i] - dist.values[j]);
        }
    }
    return params.scale() * total;
}

double kbin_polarization(const BeliefConfig& config, const Discretization& disc,
                         const PolarizationParams& params) {
    return esteban_ray(belief_distribution(config, disc), params);
}

bool is_zero_polarization(const BeliefConfig& config, const Discretization& disc) {
    const std::size_t first = disc.bin_index(config[0]);
    for (double b : config) {
        if (disc.bin_index(b) != first) return false;
    }
    return true;
}

}  // namespace beliefpol
