#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "beliefpol/config.hpp"
#include "beliefpol/graph_analysis.hpp"
#include "beliefpol/scenarios.hpp"
#include "beliefpol/theory_checks.hpp"
#include "beliefpol/trace_io.hpp"

namespace beliefpol::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr double kStepDriftLimit = 1e-10;
constexpr double kTotalDriftLimit = 1e-7;
constexpr double kConsensusTolerance = 1e-6;
constexpr double kDegrootTolerance = 1e-12;
constexpr std::size_t kDegrootRecordLimit = 1000;

struct LoadOutcome {
    std::optional<ResolvedScenario> scenario;
    int code = kExitOk;
};

LoadOutcome load(const std::filesystem::path& path, std::ostream& err) {
    LoadOutcome outcome;
    try {
        outcome.scenario.emplace(resolve(load_config(path)));
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        outcome.code = kExitIo;
    } catch (const ConfigError& e) {
        err << "error: " << path.string() << ": " << e.what() << '\n';
        outcome.code = kExitBadConfig;
    }
    return outcome;
}

struct RunResult {
    int code = kExitOk;
    std::string summary;
};

RunResult run_one(const std::filesystem::path& config, const std::filesystem::path& output,
                  TraceFormat format, std::ostream& err) {
    RunResult result;
    auto loaded = load(config, err);
    if (!loaded.scenario) {
        result.code = loaded.code;
        return result;
    }
    const ResolvedScenario& s = *loaded.scenario;

    std::ofstream file(output, std::ios::binary);
    if (!file) {
        err << "error: cannot write " << output.string() << '\n';
        result.code = kExitIo;
        return result;
    }
    TraceWriter writer(file, format, s.beliefs.size(), s.options.discretizations.size());
    std::optional<StepRecord> last;
    const SimulationSummary summary = simulate(s.beliefs, s.graph, s.options, [&](const StepRecord& rec) {
        writer.write(rec);
        last = rec;
    });
    file.flush();
    if (!file) {
        err << "error: failed writing " << output.string() << '\n';
        result.code = kExitIo;
        return result;
    }

    std::ostringstream line;
    line << "status=" << to_string(summary.status) << " steps=" << summary.steps_taken
         << " final_spread=" << format_real(last->spread);
    for (std::size_t d = 0; d < last->polarization.size(); ++d) {
        line << " pol_" << d << '=' << format_real(last->polarization[d]);
    }
    result.summary = line.str();
    result.code = summary.status == SimulationStatus::Converged ? kExitOk : kExitNotConverged;
    return result;
}

Json optional_real(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

enum class CheckStatus { Pass, Fail, HypothesesUnmet };

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::HypothesesUnmet: return "hypotheses-unmet";
    }
    return "unknown";
}

struct CheckResult {
    CheckStatus status;
    Json detail = Json::object();
};

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

CheckResult run_check(const std::string& name, const ResolvedScenario& s, const SimulationTrace& trace,
                      std::uint64_t seed) {
    const UpdateKind kind = s.options.kind;
    if (name == "extremal-bounds") {
        return {pass_if(check_extremal_bounds(trace)), {{"steps", trace.records.size() - 1}}};
    }
    if (name == "monotone-extremes") {
        return {pass_if(check_monotone_extremes(trace)), {{"steps", trace.records.size() - 1}}};
    }
    if (name == "path-bound") {
        try {
            const PathBoundSampling r = sample_path_bounds(trace, s.graph, 200, seed);
            if (r.checked == 0) {
                return {CheckStatus::HypothesesUnmet, {{"reason", "trace too short for any path"}}};
            }
            return {pass_if(r.violations == 0), {{"checked", r.checked}, {"violations", r.violations}}};
        } catch (const HypothesisError& e) {
            return {CheckStatus::HypothesesUnmet, {{"reason", e.what()}}};
        }
    }
    if (name == "consensus-value") {
        const auto predicted = consensus_prediction(s.graph, trace.records.front().beliefs, kind);
        if (!predicted) {
            return {CheckStatus::HypothesesUnmet,
                    {{"reason", "graph is not weakly connected and regular with the required symmetry"}}};
        }
        double deviation = 0.0;
        for (double b : trace.final_record().beliefs) deviation = std::max(deviation, std::abs(b - *predicted));
        return {pass_if(deviation < kConsensusTolerance),
                {{"predicted", *predicted},
                 {"observed_limit", trace.final_record().beliefs.mean()},
                 {"max_deviation", deviation},
                 {"tolerance", kConsensusTolerance}}};
    }
    if (name == "degroot-equivalence") {
        const StochasticMatrix matrix = degroot_matrix(s.graph);
        const std::size_t count = trace.records.size();
        const std::size_t stride = std::max<std::size_t>(1, count / kDegrootRecordLimit);
        double worst = 0.0;
        std::size_t compared = 0;
        for (std::size_t k = 0; k < count; k += stride, ++compared) {
            worst = std::max(worst, degroot_discrepancy(s.graph, matrix, trace.records[k].beliefs));
        }
        return {pass_if(worst <= kDegrootTolerance),
                {{"records_compared", compared}, {"max_discrepancy", worst}, {"tolerance", kDegrootTolerance}}};
    }
    if (name == "sum-conservation") {
        if (!sum_conservation_applies(s.graph, kind)) {
            return {CheckStatus::HypothesesUnmet,
                    {{"reason", kind == UpdateKind::ConfirmationBias ? "graph is not reciprocal and regular"
                                                                    : "graph is not a regular circulation"}}};
        }
        const SumDrift drift = sum_drift(trace);
        return {pass_if(drift.max_step < kStepDriftLimit && drift.total < kTotalDriftLimit),
                {{"max_step_drift", drift.max_step}, {"total_drift", drift.total}}};
    }
    if (name == "convergence") {
        if (!is_strongly_connected(s.graph)) {
            return {CheckStatus::HypothesesUnmet, {{"reason", "graph is not strongly connected"}}};
        }
        const BeliefConfig& initial = trace.records.front().beliefs;
        if (kind == UpdateKind::ConfirmationBias && is_radical_config(initial)) {
            const bool constant = std::all_of(trace.records.begin(), trace.records.end(),
                                              [&](const StepRecord& r) { return r.beliefs == initial; });
            return {pass_if(constant), {{"branch", "radical"}}};
        }
        const double spread = trace.final_record().beliefs.spread();
        return {pass_if(spread < kConsensusTolerance),
                {{"final_spread", spread}, {"tolerance", kConsensusTolerance}}};
    }
    throw std::logic_error("unhandled check " + name);
}

}  // namespace

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> checks = {"extremal-bounds", "monotone-extremes",  "path-bound",
                                                    "consensus-value", "degroot-equivalence", "sum-conservation",
                                                    "convergence"};
    return checks;
}

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
    TraceFormat format;
    try {
        format = trace_format_from_name(args.format);
    } catch (const ModelError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadConfig;
    }
    if (args.configs.empty()) {
        err << "error: no config given\n";
        return kExitBadConfig;
    }
    const bool single = args.configs.size() == 1 && args.output.has_value();
    if (!single && !args.output_dir) {
        err << "error: several configs need --output-dir\n";
        return kExitBadConfig;
    }
    const std::string extension = format == TraceFormat::Csv ? ".csv" : ".jsonl";
    auto target = [&](std::size_t k) {
        return single ? *args.output : *args.output_dir / (args.configs[k].stem().string() + extension);
    };

    std::vector<RunResult> results(args.configs.size());
    std::mutex err_lock;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < args.configs.size(); k = next++) {
            std::ostringstream local_err;
            results[k] = run_one(args.configs[k], target(k), format, local_err);
            std::lock_guard lock(err_lock);
            err << local_err.str();
        }
    };
    const unsigned threads = std::clamp<unsigned>(args.jobs, 1, static_cast<unsigned>(args.configs.size()));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < threads; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    int code = kExitOk;
    for (std::size_t k = 0; k < results.size(); ++k) {
        const RunResult& r = results[k];
        if (!r.summary.empty()) {
            if (args.configs.size() > 1) out << args.configs[k].string() << ": ";
            out << r.summary << '\n';
        }
        const bool failed = r.code == kExitBadConfig || r.code == kExitIo;
        const bool code_failed = code == kExitBadConfig || code == kExitIo;
        if (failed && !code_failed) {
            code = r.code;
        } else if (r.code == kExitNotConverged && code == kExitOk) {
            code = kExitNotConverged;
        }
    }
    return code;
}

int cmd_analyze(const std::filesystem::path& config, std::ostream& out, std::ostream& err) {
    auto loaded = load(config, err);
    if (!loaded.scenario) return loaded.code;
    const ResolvedScenario& s = *loaded.scenario;
    const UpdateKind kind = s.options.kind;

    Json report = Json::object();
    report["n"] = s.beliefs.size();
    report["update"] = to_string(kind);
    report["strongly_connected"] = is_strongly_connected(s.graph);
    report["weakly_connected"] = is_weakly_connected(s.graph);
    report["balanced"] = is_balanced(s.graph);
    report["reciprocal"] = is_reciprocal(s.graph);
    report["regular"] = is_regular(s.graph);
    report["radical"] = is_radical_config(s.beliefs);
    report["violates_extremes_assumption"] = violates_extremes_assumption(s.beliefs);
    report["min_positive_influence"] = min_positive_influence(s.graph);
    report["min_confirmation_bias_factor"] = min_confirmation_bias_factor(s.beliefs);
    report["initial_mean"] = s.beliefs.mean();
    report["predicted_consensus"] = optional_real(consensus_prediction(s.graph, s.beliefs, kind));

    Json per_disc = Json::array();
    for (const Discretization& disc : s.options.discretizations) {
        const PrognosisReport p = prognosis(s.graph, s.beliefs, disc, kind);
        Json d = Json::object();
        d["bins"] = disc.bin_count();
        d["initial_polarization"] = kbin_polarization(s.beliefs, disc, s.options.params);
        d["borderline_risk"] = optional_real(p.borderline_risk);
        d["polarization_vanishes"] = p.polarization_vanishes;
        per_disc.push_back(std::move(d));
    }
    report["discretizations"] = std::move(per_disc);
    out << report.dump(2) << '\n';
    return kExitOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> checks = args.checks.empty() ? known_checks() : args.checks;
    for (const std::string& c : checks) {
        if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end()) {
            err << "error: unknown check '" << c << "'\n";
            return kExitBadConfig;
        }
    }
    auto loaded = load(args.config, err);
    if (!loaded.scenario) return loaded.code;
    const ResolvedScenario& s = *loaded.scenario;

    SimulationTrace trace;
    if (args.trace) {
        std::ifstream in(*args.trace, std::ios::binary);
        if (!in) {
            err << "error: cannot read " << args.trace->string() << '\n';
            return kExitIo;
        }
        try {
            trace = read_trace_csv(in, s.options.kind);
        } catch (const ModelError& e) {
            err << "error: " << args.trace->string() << ": " << e.what() << '\n';
            return kExitBadConfig;
        }
        if (trace.records.front().beliefs.size() != s.beliefs.size()) {
            err << "error: trace has " << trace.records.front().beliefs.size() << " agents, config has "
                << s.beliefs.size() << '\n';
            return kExitBadConfig;
        }
    } else {
        trace = simulate(s.beliefs, s.graph, s.options);
    }

    Json results = Json::array();
    bool all_ok = true;
    for (const std::string& name : checks) {
        CheckResult r = run_check(name, s, trace, args.seed);
        all_ok = all_ok && r.status != CheckStatus::Fail;
        Json entry = Json::object();
        entry["check"] = name;
        entry["status"] = to_string(r.status);
        entry["detail"] = std::move(r.detail);
        results.push_back(std::move(entry));
    }
    Json report = Json::object();
    report["source"] = args.trace ? "trace" : "simulation";
    report["steps"] = trace.records.size() - 1;
    report["checks"] = std::move(results);
    report["passed"] = all_ok;
    out << report.dump(2) << '\n';
    return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_scenario(const ScenarioArgs& args, std::ostream& out, std::ostream& err) {
    ScenarioConfig c;
    try {
        c.update = update_kind_from_name(args.update);
        if (args.name == "vaccine" || args.name == "borderline") {
            const NamedExample ex = named_example(args.name);
            c.n = ex.beliefs.size();
            c.beliefs = std::vector<double>(ex.beliefs.begin(), ex.beliefs.end());
            c.discretizations.clear();
            for (const Discretization& d : ex.discretizations) c.discretizations.emplace_back(d.bin_count());
            if (args.name == "vaccine") {
                MatrixInfluence m;
                m.rows.assign(c.n, std::vector<std::optional<double>>(c.n));
                for (std::size_t i = 0; i < c.n; ++i) m.rows[i][i] = 1.0;
                c.influence = std::move(m);
                c.notes = ex.notes + "; replace every null entry of influence.matrix";
            } else {
                c.influence = PresetInfluence{"clique", 0.5};
                c.notes = ex.notes + "; the 0.5-clique stand-in converges to 0.5";
            }
        } else {
            const GraphPreset preset = graph_preset_from_name(args.name, args.weight.value_or(0.5));
            if (args.weight && !std::holds_alternative<graphs::Clique>(preset) &&
                !std::holds_alternative<graphs::Circular>(preset)) {
                throw ModelError("only clique and circular presets take a weight");
            }
            (void)belief_shape_from_name(args.init);
            c.n = args.n;
            c.beliefs = args.init;
            c.influence = PresetInfluence{args.name, args.weight};
            // Catches n too small for the presets before anything is written.
            (void)resolve(c);
        }
    } catch (const ModelError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadConfig;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadConfig;
    }

    if (args.output == "-") {
        out << emit_config(c);
        return kExitOk;
    }
    try {
        save_config(c, args.output);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace beliefpol::cli
