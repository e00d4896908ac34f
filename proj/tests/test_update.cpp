#include "doctest.h"

#include <cmath>

#include "beliefpol/scenarios.hpp"
#include "beliefpol/update.hpp"
#include "support/generators.hpp"

using namespace beliefpol;

namespace {

// Convex-combination form of the update: each new belief is a weighted
// average of the old ones, with the self weight absorbing the remainder.
std::vector<double> convex_step(const BeliefConfig& b, const InfluenceGraph& g, UpdateKind kind) {
    const std::size_t n = b.size();
    std::vector<double> next(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t degree = 0;
        for (std::size_t j = 0; j < n; ++j) degree += g.weight(j, i) > 0 ? 1 : 0;
        double self = 1.0, acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || g.weight(j, i) == 0) continue;
            const double beta = kind == UpdateKind::Classical ? 1.0 : 1.0 - std::abs(b[j] - b[i]);
            const double w = beta * g.weight(j, i) / static_cast<double>(degree);
            acc += w * b[j];
            self -= w;
        }
        next[i] = acc + self * b[i];
    }
    return next;
}

}  // namespace

TEST_CASE("confirmation_bias_factor") {
    CHECK(confirmation_bias_factor(0.3, 0.3) == 1.0);
    CHECK(confirmation_bias_factor(0.0, 1.0) == 0.0);
    CHECK(confirmation_bias_factor(0.2, 0.7) == doctest::Approx(0.5));
    CHECK(confirmation_bias_factor(0.7, 0.2) == confirmation_bias_factor(0.2, 0.7));
}

TEST_CASE("step on two agents matches hand evaluation") {
    const auto g = influence_graph(graphs::Clique{0.5}, 2);
    const BeliefConfig b({0.0, 0.5});
    const auto cb = step(b, g, UpdateKind::ConfirmationBias);
    CHECK(cb[0] == 0.0625);
    CHECK(cb[1] == 0.4375);
    const auto cl = step(b, g, UpdateKind::Classical);
    CHECK(cl[0] == 0.125);
    CHECK(cl[1] == 0.375);
}

TEST_CASE("radical configurations are fixed bit-exactly") {
    testing::Rng rng(3);
    const BeliefConfig radical({0, 1, 0});
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = testing::random_graph(rng, 3, 0.7);
        CHECK(step(radical, g, UpdateKind::ConfirmationBias) == radical);
    }
}

TEST_CASE("step rejects mismatched dimensions") {
    CHECK_THROWS_AS(step(BeliefConfig({0.1, 0.2}), influence_graph(graphs::Clique{}, 3),
                         UpdateKind::ConfirmationBias),
                    ModelError);
}

TEST_CASE("step agrees with the convex-combination form") {
    testing::Rng rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = testing::pick(rng, 1, 25);
        const auto g = testing::random_graph(rng, n, testing::uniform(rng, 0, 1));
        const auto b = testing::random_config(rng, n);
        for (auto kind : {UpdateKind::ConfirmationBias, UpdateKind::Classical}) {
            const auto next = step(b, g, kind);
            const auto ref = convex_step(b, g, kind);
            for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(next[i] - ref[i]) <= 1e-14);
        }
    }
}

TEST_CASE("step commutes with relabeling the agents") {
    testing::Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = testing::pick(rng, 2, 15);
        const auto g = testing::random_graph(rng, n, 0.5);
        const auto b = testing::random_config(rng, n);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);

        // Agent i becomes agent perm[i].
        std::vector<double> pb(n), pw(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            pb[perm[i]] = b[i];
            for (std::size_t j = 0; j < n; ++j) pw[perm[i] * n + perm[j]] = g.weight(i, j);
        }
        const auto next = step(b, g, UpdateKind::ConfirmationBias);
        const auto pnext = step(BeliefConfig(pb), InfluenceGraph(n, pw), UpdateKind::ConfirmationBias);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(pnext[perm[i]] - next[i]) <= 1e-14);
    }
}

TEST_CASE("simulate on a consensus configuration stops immediately") {
    SimulationOptions options;
    const BeliefConfig b({0.4, 0.4, 0.4});
    const auto trace = simulate(b, influence_graph(graphs::Clique{}, 3), options);
    CHECK(trace.status == SimulationStatus::Converged);
    REQUIRE(trace.converged_at.has_value());
    CHECK(*trace.converged_at <= 1);
    for (const auto& rec : trace.records) CHECK(rec.beliefs == b);
}

TEST_CASE("simulate on clique(100) with uniform beliefs reaches 0.5") {
    SimulationOptions options;
    const auto trace = simulate(initial_beliefs(BeliefShape::Uniform, 100),
                                influence_graph(graphs::Clique{0.5}, 100), options);
    CHECK(trace.status == SimulationStatus::Converged);
    const auto& last = trace.final_record();
    CHECK(last.spread < 1e-6);
    for (double v : last.beliefs) CHECK(std::abs(v - 0.5) < 1e-6);
    CHECK(last.polarization.at(0) == 0.0);
    CHECK(trace.records.front().t == 0);
    CHECK(trace.records.back().t == trace.records.size() - 1);
}

TEST_CASE("simulate on the disconnected graph keeps two camps") {
    SimulationOptions options;
    options.max_steps = 2000;
    const auto trace = simulate(initial_beliefs(BeliefShape::ExtremelyPolarized, 100),
                                influence_graph(graphs::Disconnected{}, 100), options);
    CHECK(trace.status == SimulationStatus::MaxStepsReached);
    CHECK(!trace.converged_at.has_value());
    CHECK(trace.final_record().polarization.at(0) == doctest::Approx(131.95).epsilon(0.5 / 131.95));
}

TEST_CASE("streaming and collected simulations agree") {
    SimulationOptions options;
    options.max_steps = 50;
    options.discretizations = {Discretization::equal_width(2), Discretization::equal_width(5)};
    const auto b = initial_beliefs(BeliefShape::Tripolar, 9);
    const auto g = influence_graph(graphs::Faint{}, 9);
    const auto trace = simulate(b, g, options);
    std::vector<StepRecord> streamed;
    const auto summary = simulate(b, g, options, [&](const StepRecord& r) { streamed.push_back(r); });
    REQUIRE(streamed.size() == trace.records.size());
    CHECK(summary.steps_taken + 1 == streamed.size());
    for (std::size_t k = 0; k < streamed.size(); ++k) {
        CHECK(streamed[k].beliefs == trace.records[k].beliefs);
        CHECK(streamed[k].polarization == trace.records[k].polarization);
    }
}

TEST_CASE("beliefs stay in range for random runs") {
    testing::Rng rng(29);
    SimulationOptions options;
    options.max_steps = 40;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = testing::pick(rng, 1, 20);
        options.kind = trial % 2 ? UpdateKind::Classical : UpdateKind::ConfirmationBias;
        const auto trace = simulate(testing::random_config(rng, n), testing::random_graph(rng, n, 0.6), options);
        for (const auto& rec : trace.records)
            for (double v : rec.beliefs) CHECK((v >= 0.0 && v <= 1.0));
    }
}
