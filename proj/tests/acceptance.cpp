// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "beliefpol/graph_analysis.hpp"
#include "beliefpol/polarization.hpp"
#include "beliefpol/scenarios.hpp"
#include "beliefpol/theory_checks.hpp"
#include "beliefpol/update.hpp"
#include "support/generators.hpp"

using namespace beliefpol;
namespace bt = beliefpol::testing;

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && passed) detail << "first failure: " << what << "; ";
        passed = passed && ok;
    }
};

const BeliefShape kShapes[] = {BeliefShape::Uniform, BeliefShape::MildlyPolarized, BeliefShape::ExtremelyPolarized,
                               BeliefShape::Tripolar};

std::string label(const GraphPreset& g, BeliefShape s) { return graph_preset_name(g) + "/" + to_string(s); }

void ac1_convergence(Outcome& o) {
    const std::pair<GraphPreset, std::size_t> graphs_under_test[] = {
        {graphs::Clique{0.5}, 100}, {graphs::Circular{}, 12}, {graphs::Faint{}, 100}, {graphs::Malleable{}, 100}};
    std::size_t worst_steps = 0;
    double worst_spread = 0;
    for (const auto& [preset, n] : graphs_under_test) {
        const auto g = influence_graph(preset, n);
        for (BeliefShape shape : kShapes) {
            const auto b = initial_beliefs(shape, n);
            o.require(!is_radical_config(b), label(preset, shape) + " radical init");
            const auto v = check_convergence_theorem(g, b, UpdateKind::ConfirmationBias);
            o.require(v.passed && v.final_spread < 1e-6 && v.steps <= 100000, label(preset, shape));
            worst_steps = std::max(worst_steps, v.steps);
            worst_spread = std::max(worst_spread, v.final_spread);
        }
    }
    o.detail << "16 runs, max steps " << worst_steps << ", max final spread " << worst_spread;
}

void ac2_consensus_value(Outcome& o) {
    double worst = 0;
    auto check = [&](const InfluenceGraph& g, const BeliefConfig& b, UpdateKind kind, const std::string& what) {
        const auto v = check_consensus_value(g, b, kind);
        o.require(v.passed && std::abs(v.predicted - b.mean()) == 0.0 && v.max_deviation < 1e-6, what);
        worst = std::max(worst, v.max_deviation);
    };
    const auto clique = influence_graph(graphs::Clique{0.5}, 100);
    const auto circular = influence_graph(graphs::Circular{}, 12);
    for (BeliefShape shape : kShapes) {
        check(clique, initial_beliefs(shape, 100), UpdateKind::ConfirmationBias, label(graphs::Clique{}, shape));
        check(circular, initial_beliefs(shape, 12), UpdateKind::Classical, label(graphs::Circular{}, shape));
    }
    bt::Rng rng(2024);
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t n = bt::pick(rng, 5, 30);
        const auto g = bt::random_regular_circulation(rng, n, bt::pick(rng, 1, 3));
        o.require(is_balanced(g) && is_regular(g) && is_weakly_connected(g), "generated circulation hypotheses");
        check(g, bt::random_config(rng, n), UpdateKind::Classical, "regular circulation #" + std::to_string(trial));
    }
    o.detail << "13 runs, max |b - mean| " << worst;
}

void ac3_sum_conservation(Outcome& o) {
    double worst_step = 0, worst_total = 0;
    auto check = [&](const InfluenceGraph& g, const BeliefConfig& b, UpdateKind kind, const std::string& what) {
        o.require(sum_conservation_applies(g, kind), what + " hypotheses");
        SimulationOptions options;
        options.kind = kind;
        options.discretizations.clear();
        const auto drift = sum_drift(simulate(b, g, options));
        o.require(drift.max_step < 1e-10 && drift.total < 1e-7, what);
        worst_step = std::max(worst_step, drift.max_step);
        worst_total = std::max(worst_total, drift.total);
    };
    for (BeliefShape shape : kShapes) {
        check(influence_graph(graphs::Clique{0.5}, 100), initial_beliefs(shape, 100), UpdateKind::ConfirmationBias,
              label(graphs::Clique{}, shape));
        check(influence_graph(graphs::Circular{}, 12), initial_beliefs(shape, 12), UpdateKind::Classical,
              label(graphs::Circular{}, shape));
    }
    bt::Rng rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = bt::pick(rng, 4, 40);
        const auto weight = bt::uniform(rng, 0.05, 1.0);
        check(influence_graph(graphs::Clique{weight}, n), bt::random_config(rng, n), UpdateKind::ConfirmationBias,
              "random clique #" + std::to_string(trial));
        const auto g = bt::random_regular_circulation(rng, n, bt::pick(rng, 1, 4));
        check(g, bt::random_config(rng, n), UpdateKind::Classical, "regular circulation #" + std::to_string(trial));
    }
    o.detail << "36 runs, max per-step drift " << worst_step << ", max total drift " << worst_total;
}

void ac4_disconnected(Outcome& o) {
    const auto g = influence_graph(graphs::Disconnected{}, 100);
    const auto b = initial_beliefs(BeliefShape::ExtremelyPolarized, 100);
    SimulationOptions options;
    bool ever_zero = false;
    double final_pol = 0;
    const auto summary = simulate(b, g, options, [&](const StepRecord& rec) {
        ever_zero = ever_zero || rec.polarization[0] == 0.0;
        final_pol = rec.polarization[0];
    });
    o.require(!ever_zero, "polarization reached 0");
    o.require(std::abs(final_pol - 131.95) <= 0.5, "final polarization");
    o.detail << "steps " << summary.steps_taken << " (" << to_string(summary.status) << "), final D5 polarization "
             << final_pol;
}

void ac5_borderline(Outcome& o) {
    const auto ex = named_example("borderline");
    SimulationOptions options;
    options.discretizations = {Discretization::equal_width(2), Discretization::equal_width(3)};
    const auto trace = simulate(ex.beliefs, influence_graph(graphs::Clique{0.5}, 6), options);
    const double expected = 1000.0 * std::pow(0.5, 3.6);

    o.require(trace.status == SimulationStatus::Converged, "converged");
    for (double v : trace.final_record().beliefs) o.require(std::abs(v - 0.5) < 1e-6, "limit 0.5");

    const auto d3 = zero_polarization(trace, 1);
    o.require(d3.first_zero.has_value() && d3.stays_zero, "D3 polarization reaches exactly 0 and stays");

    const auto d2 = Discretization::equal_width(2);
    std::size_t split_steps = 0;
    double worst_sym = 0, worst_pol = 0;
    for (const auto& rec : trace.records) {
        const auto dist = belief_distribution(rec.beliefs, d2);
        const bool split = dist.weights[0] == 0.5 && dist.weights[1] == 0.5;
        o.require(split, "3/3 split at t=" + std::to_string(rec.t));
        if (split) {
            ++split_steps;
            worst_pol = std::max(worst_pol, std::abs(rec.polarization[0] - expected));
            o.require(std::abs(rec.polarization[0] - expected) <= 0.01, "D2 value at t=" + std::to_string(rec.t));
        }
        for (std::size_t i = 0; i < 6; ++i) worst_sym = std::max(worst_sym, std::abs(rec.beliefs[i] - (1.0 - rec.beliefs[5 - i])));
    }
    o.require(worst_sym <= 1e-12, "symmetry");
    o.detail << "converged at t=" << trace.converged_at.value_or(0) << ", D3 zero from t=" << d3.first_zero.value_or(0)
             << ", split at " << split_steps << "/" << trace.records.size() << " steps, max |D2 - "
             << expected << "| " << worst_pol << ", max asymmetry " << worst_sym;
}

void ac6_radical(Outcome& o) {
    bt::Rng rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = bt::pick(rng, 2, 40);
        const auto g = bt::random_graph(rng, n, bt::uniform(rng, 0.1, 1.0));
        const auto initial = bt::random_radical(rng, n);
        auto b = initial;
        bool fixed = true;
        for (int t = 0; t < 1000 && fixed; ++t) {
            b = step(b, g, UpdateKind::ConfirmationBias);
            fixed = b == initial;
        }
        o.require(fixed, "graph #" + std::to_string(trial));
    }
    o.detail << "50 graphs x 1000 steps bit-exact";
}

void ac7_degroot(Outcome& o) {
    bt::Rng rng(7);
    double worst = 0, worst_row = 0, min_diag = 1;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = bt::pick(rng, 1, 30);
        const auto g = bt::random_graph(rng, n, bt::uniform(rng, 0.0, 1.0));
        const auto t = degroot_matrix(g);
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0;
            for (std::size_t j = 0; j < n; ++j) sum += t(i, j);
            worst_row = std::max(worst_row, std::abs(sum - 1.0));
            min_diag = std::min(min_diag, t(i, i));
        }
        worst = std::max(worst, degroot_discrepancy(g, t, bt::random_config(rng, n)));
    }
    o.require(worst <= 1e-12, "componentwise agreement");
    o.require(worst_row <= 1e-12, "row sums");
    o.require(min_diag > 0, "positive diagonal");
    o.detail << "1000 pairs, max discrepancy " << worst << ", max row-sum error " << worst_row << ", min diagonal "
             << min_diag;
}

void ac8_lemmas(Outcome& o) {
    bt::Rng rng(8);
    std::size_t steps = 0;
    while (steps < 10000) {
        const std::size_t n = bt::pick(rng, 1, 30);
        SimulationOptions options;
        options.kind = bt::pick(rng, 0, 1) ? UpdateKind::Classical : UpdateKind::ConfirmationBias;
        options.max_steps = 50;
        options.tolerance = 1e-300;
        options.discretizations.clear();
        const auto trace = simulate(bt::random_config(rng, n), bt::random_graph(rng, n, bt::uniform(rng, 0, 1)), options);
        o.require(check_extremal_bounds(trace), "extremal bounds");
        o.require(check_monotone_extremes(trace), "monotone extremes");
        steps += trace.records.size() - 1;
    }
    std::size_t checked = 0, violations = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = bt::pick(rng, 3, 15);
        const auto g = bt::random_strongly_connected(rng, n, bt::uniform(rng, 0.0, 0.5));
        SimulationOptions options;
        options.max_steps = 100;
        options.tolerance = 1e-300;
        options.discretizations.clear();
        const auto trace = simulate(bt::random_config(rng, n, true), g, options);
        const auto s = sample_path_bounds(trace, g, 200, static_cast<std::uint64_t>(trial));
        o.require(s.checked == 200, "200 samples on graph #" + std::to_string(trial));
        o.require(s.violations == 0, "path bound on graph #" + std::to_string(trial));
        checked += s.checked;
        violations += s.violations;
    }
    o.detail << steps << " randomized steps; path bound " << checked << " samples, " << violations << " violations";
}

void ac9_flow(Outcome& o) {
    bt::Rng rng(9);
    std::size_t weakly = 0;
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = bt::pick(rng, 3, 25);
        const auto g = bt::random_circulation(rng, n, bt::pick(rng, 1, 6));
        o.require(is_balanced(g), "balanced #" + std::to_string(trial));
        std::vector<AgentId> agents(n);
        std::iota(agents.begin(), agents.end(), 0);
        for (int cut = 0; cut < 10; ++cut) {
            std::shuffle(agents.begin(), agents.end(), rng);
            const auto flow = group_flow(g, std::span<const AgentId>(agents.data(), bt::pick(rng, 1, n - 1)));
            worst = std::max(worst, std::abs(flow.out - flow.in));
        }
        if (is_weakly_connected(g)) {
            ++weakly;
            o.require(is_strongly_connected(g), "strongly connected #" + std::to_string(trial));
        }
    }
    o.require(worst <= 1e-9, "group flow");
    o.require(weakly > 0, "some sample weakly connected");
    o.detail << "100 circulations, 1000 cuts, max |out - in| " << worst << ", " << weakly
             << " weakly connected samples all strongly connected";
}

void ac10_measure(Outcome& o) {
    bt::Rng rng(10);
    const PolarizationParams params;
    std::size_t zeros = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const auto disc = Discretization::equal_width(bt::pick(rng, 1, 10));
        const std::size_t n = bt::pick(rng, 1, 50);
        std::vector<double> b(n);
        if (trial % 2 == 0) {
            const std::size_t bin = bt::pick(rng, 0, disc.bin_count() - 1);
            for (double& v : b) v = bt::uniform(rng, disc.boundaries()[bin], disc.boundaries()[bin + 1]);
        } else {
            for (double& v : b) v = bt::uniform(rng, 0, 1);
        }
        const BeliefConfig config(b);
        const double rho = kbin_polarization(config, disc, params);
        const auto dist = belief_distribution(config, disc);
        const bool single_bin = std::count_if(dist.weights.begin(), dist.weights.end(), [](double w) { return w > 0; }) == 1;
        o.require((rho == 0.0) == single_bin, "zero iff single bin");
        zeros += rho == 0.0;

        for (std::size_t m : {2u, 3u, 5u}) {
            std::vector<double> rep;
            for (std::size_t r = 0; r < m; ++r) rep.insert(rep.end(), b.begin(), b.end());
            o.require(kbin_polarization(BeliefConfig(rep), disc, params) == rho, "replication m=" + std::to_string(m));
        }
    }

    const std::size_t n = 100;
    const auto b = initial_beliefs(BeliefShape::Uniform, n);
    SimulationOptions options;
    options.discretizations.clear();
    BeliefConfig last = b;
    simulate(b, influence_graph(graphs::Unrelenting{}, n), options, [&](const StepRecord& rec) { last = rec.beliefs; });
    double worst = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) worst = std::max(worst, std::abs(last[i] - 0.5));
    o.require(last[0] == 0.0 && last[n - 1] == 1.0, "influencers unmoved");
    o.require(worst <= 0.01, "interior agents at 0.5");
    o.detail << "10000 configs (" << zeros << " zero), replication exact; unrelenting max |b - 0.5| " << worst;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
        {"AC1 convergence on strongly connected graphs", ac1_convergence},
        {"AC2 consensus value", ac2_consensus_value},
        {"AC3 sum conservation", ac3_sum_conservation},
        {"AC4 disconnected persistence", ac4_disconnected},
        {"AC5 borderline effect", ac5_borderline},
        {"AC6 radical fixed point", ac6_radical},
        {"AC7 DeGroot equivalence", ac7_degroot},
        {"AC8 extremal, monotone and path bounds", ac8_lemmas},
        {"AC9 flow properties", ac9_flow},
        {"AC10 measure properties", ac10_measure},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %s: %s (%.2fs)\n", o.passed ? "PASS" : "FAIL", name, o.detail.str().c_str(), secs);
        std::fflush(stdout);
        failures += o.passed ? 0 : 1;
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
