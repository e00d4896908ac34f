#include "beliefpol/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "beliefpol/scenarios.hpp"

namespace beliefpol {

using Json = nlohmann::ordered_json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::string at_index(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

void reject_unknown_fields(const Json& object, const std::string& path,
                           std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : object.items()) {
        bool known = false;
        for (std::string_view a : allowed) known = known || key == a;
        if (!known) throw ConfigError(path + "." + key, "unknown field");
    }
}

const Json& require_field(const Json& object, const std::string& path, const char* key) {
    const auto it = object.find(key);
    if (it == object.end()) throw ConfigError(path + "." + key, "missing required field");
    return *it;
}

double read_real(const Json& value, const std::string& path) {
    if (!value.is_number()) throw ConfigError(path, "expected a number");
    return value.get<double>();
}

std::size_t read_count(const Json& value, const std::string& path) {
    if (!value.is_number_unsigned()) {
        throw ConfigError(path, "expected a non-negative integer");
    }
    return value.get<std::size_t>();
}

std::vector<double> read_reals(const Json& value, const std::string& path) {
    if (!value.is_array()) throw ConfigError(path, "expected an array of numbers");
    std::vector<double> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) out.push_back(read_real(value[i], at_index(path, i)));
    return out;
}

InfluenceSpec read_influence(const Json& value, const std::string& path) {
    if (value.is_string()) return PresetInfluence{value.get<std::string>(), std::nullopt};
    if (!value.is_object()) {
        throw ConfigError(path, "expected a preset name or an object with 'preset', 'matrix' or 'edges'");
    }
    if (value.contains("preset")) {
        reject_unknown_fields(value, path, {"preset", "weight"});
        const Json& name = value["preset"];
        if (!name.is_string()) throw ConfigError(path + ".preset", "expected a preset name");
        PresetInfluence p{name.get<std::string>(), std::nullopt};
        if (value.contains("weight")) p.weight = read_real(value["weight"], path + ".weight");
        return p;
    }
    if (value.contains("matrix")) {
        reject_unknown_fields(value, path, {"matrix"});
        const std::string mpath = path + ".matrix";
        const Json& rows = value["matrix"];
        if (!rows.is_array()) throw ConfigError(mpath, "expected an array of rows");
        MatrixInfluence m;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::string rpath = at_index(mpath, i);
            if (!rows[i].is_array()) throw ConfigError(rpath, "expected an array of numbers");
            std::vector<std::optional<double>> row;
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                const Json& e = rows[i][j];
                if (e.is_null()) {
                    row.emplace_back(std::nullopt);
                } else {
                    row.emplace_back(read_real(e, at_index(rpath, j)));
                }
            }
            m.rows.push_back(std::move(row));
        }
        return m;
    }
    if (value.contains("edges")) {
        reject_unknown_fields(value, path, {"edges"});
        const std::string epath = path + ".edges";
        const Json& edges = value["edges"];
        if (!edges.is_array()) throw ConfigError(epath, "expected an array of [i, j, w] triples");
        EdgeListInfluence list;
        for (std::size_t k = 0; k < edges.size(); ++k) {
            const std::string p = at_index(epath, k);
            const Json& e = edges[k];
            if (!e.is_array() || e.size() != 3) throw ConfigError(p, "expected [i, j, w]");
            list.edges.push_back({read_count(e[0], at_index(p, 0)), read_count(e[1], at_index(p, 1)),
                                  read_real(e[2], at_index(p, 2))});
        }
        return list;
    }
    throw ConfigError(path, "expected one of 'preset', 'matrix' or 'edges'");
}

Json real_json(double v) { return Json(v); }

Json influence_json(const InfluenceSpec& spec) {
    return std::visit(
        overloaded{
            [](const PresetInfluence& p) -> Json {
                if (!p.weight) return Json(p.name);
                Json o = Json::object();
                o["preset"] = p.name;
                o["weight"] = real_json(*p.weight);
                return o;
            },
            [](const MatrixInfluence& m) -> Json {
                Json rows = Json::array();
                for (const auto& row : m.rows) {
                    Json r = Json::array();
                    for (const auto& e : row) r.push_back(e ? real_json(*e) : Json(nullptr));
                    rows.push_back(std::move(r));
                }
                Json o = Json::object();
                o["matrix"] = std::move(rows);
                return o;
            },
            [](const EdgeListInfluence& l) -> Json {
                Json edges = Json::array();
                for (const WeightedEdge& e : l.edges) {
                    edges.push_back(Json::array({e.from, e.to, real_json(e.weight)}));
                }
                Json o = Json::object();
                o["edges"] = std::move(edges);
                return o;
            },
        },
        spec);
}

InfluenceGraph resolve_graph(const ScenarioConfig& config) {
    const std::size_t n = config.n;
    const std::string path = "$.influence";
    return std::visit(
        overloaded{
            [&](const PresetInfluence& p) -> InfluenceGraph {
                GraphPreset preset;
                try {
                    preset = graph_preset_from_name(p.name, p.weight.value_or(0.5));
                } catch (const ModelError& e) {
                    throw ConfigError(p.weight ? path + ".preset" : path, e.what());
                }
                if (p.weight && !std::holds_alternative<graphs::Clique>(preset) &&
                    !std::holds_alternative<graphs::Circular>(preset)) {
                    throw ConfigError(path + ".weight", "only clique and circular presets take a weight");
                }
                if (p.weight && !(*p.weight > 0.0 && *p.weight <= 1.0)) {
                    throw ConfigError(path + ".weight", "weight must lie in (0,1]");
                }
                try {
                    return influence_graph(preset, n);
                } catch (const ModelError& e) {
                    throw ConfigError(path, e.what());
                }
            },
            [&](const MatrixInfluence& m) -> InfluenceGraph {
                const std::string mpath = path + ".matrix";
                if (n > kMaxExplicitMatrixAgents) {
                    throw ConfigError(mpath, "explicit matrices are limited to " +
                                                 std::to_string(kMaxExplicitMatrixAgents) +
                                                 " agents; use 'edges'");
                }
                if (m.rows.size() != n) {
                    throw ConfigError(mpath, "expected " + std::to_string(n) + " rows, got " +
                                                 std::to_string(m.rows.size()));
                }
                std::vector<double> flat(n * n);
                for (std::size_t i = 0; i < n; ++i) {
                    const std::string rpath = at_index(mpath, i);
                    if (m.rows[i].size() != n) {
                        throw ConfigError(rpath, "expected " + std::to_string(n) + " entries, got " +
                                                     std::to_string(m.rows[i].size()));
                    }
                    for (std::size_t j = 0; j < n; ++j) {
                        const std::string epath = at_index(rpath, j);
                        if (!m.rows[i][j]) {
                            throw ConfigError(epath, "placeholder: replace with an influence weight in [0,1]");
                        }
                        const double w = *m.rows[i][j];
                        if (!(w >= 0.0 && w <= 1.0)) throw ConfigError(epath, "weight outside [0,1]");
                        if (i == j && w != 1.0) throw ConfigError(epath, "self-influence must be 1");
                        flat[i * n + j] = w;
                    }
                }
                return InfluenceGraph(n, std::move(flat));
            },
            [&](const EdgeListInfluence& l) -> InfluenceGraph {
                const std::string epath = path + ".edges";
                std::vector<double> flat(n * n, 0.0);
                for (std::size_t i = 0; i < n; ++i) flat[i * n + i] = 1.0;
                std::set<std::pair<std::size_t, std::size_t>> seen;
                for (std::size_t k = 0; k < l.edges.size(); ++k) {
                    const WeightedEdge& e = l.edges[k];
                    const std::string p = at_index(epath, k);
                    if (e.from >= n || e.to >= n) throw ConfigError(p, "agent index out of range");
                    if (!seen.emplace(e.from, e.to).second) throw ConfigError(p, "duplicate edge");
                    if (!(e.weight >= 0.0 && e.weight <= 1.0)) throw ConfigError(at_index(p, 2), "weight outside [0,1]");
                    if (e.from == e.to && e.weight != 1.0) {
                        throw ConfigError(at_index(p, 2), "self-influence must be 1");
                    }
                    flat[e.from * n + e.to] = e.weight;
                }
                return InfluenceGraph(n, std::move(flat));
            },
        },
        config.influence);
}

}  // namespace

UpdateKind update_kind_from_name(std::string_view name) {
    if (name == "confirmation-bias") return UpdateKind::ConfirmationBias;
    if (name == "classical") return UpdateKind::Classical;
    throw ModelError("unknown update '" + std::string(name) +
                     "' (expected confirmation-bias or classical)");
}

ScenarioConfig parse_config(std::string_view text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("$", std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("$", "expected a JSON object");
    reject_unknown_fields(root, "$", {"schema_version", "n", "beliefs", "influence", "update",
                                      "max_steps", "tolerance", "polarization", "notes"});

    ScenarioConfig c;
    const Json& version = require_field(root, "$", "schema_version");
    if (!version.is_number_integer() || version.get<long long>() != kSchemaVersion) {
        throw ConfigError("$.schema_version", "unsupported schema version (expected " +
                                                  std::to_string(kSchemaVersion) + ")");
    }
    c.n = read_count(require_field(root, "$", "n"), "$.n");
    if (c.n == 0) throw ConfigError("$.n", "need at least one agent");

    const Json& beliefs = require_field(root, "$", "beliefs");
    if (beliefs.is_string()) {
        c.beliefs = beliefs.get<std::string>();
    } else {
        c.beliefs = read_reals(beliefs, "$.beliefs");
    }
    c.influence = read_influence(require_field(root, "$", "influence"), "$.influence");

    if (root.contains("update")) {
        const Json& u = root["update"];
        if (!u.is_string()) throw ConfigError("$.update", "expected a string");
        try {
            c.update = update_kind_from_name(u.get<std::string>());
        } catch (const ModelError& e) {
            throw ConfigError("$.update", e.what());
        }
    }
    if (root.contains("max_steps")) c.max_steps = read_count(root["max_steps"], "$.max_steps");
    if (root.contains("tolerance")) {
        c.tolerance = read_real(root["tolerance"], "$.tolerance");
        if (!(c.tolerance > 0.0)) throw ConfigError("$.tolerance", "must be positive");
    }
    if (root.contains("polarization")) {
        const Json& pol = root["polarization"];
        if (!pol.is_object()) throw ConfigError("$.polarization", "expected an object");
        reject_unknown_fields(pol, "$.polarization", {"K", "alpha", "discretizations"});
        if (pol.contains("K")) c.scale = read_real(pol["K"], "$.polarization.K");
        if (pol.contains("alpha")) c.alpha = read_real(pol["alpha"], "$.polarization.alpha");
        if (pol.contains("discretizations")) {
            const std::string dpath = "$.polarization.discretizations";
            const Json& discs = pol["discretizations"];
            if (!discs.is_array() || discs.empty()) {
                throw ConfigError(dpath, "expected a non-empty array of bin counts or boundary lists");
            }
            c.discretizations.clear();
            for (std::size_t k = 0; k < discs.size(); ++k) {
                const std::string p = at_index(dpath, k);
                if (discs[k].is_array()) {
                    c.discretizations.emplace_back(read_reals(discs[k], p));
                } else {
                    c.discretizations.emplace_back(read_count(discs[k], p));
                }
            }
        }
    }
    if (root.contains("notes")) {
        if (!root["notes"].is_string()) throw ConfigError("$.notes", "expected a string");
        c.notes = root["notes"].get<std::string>();
    }
    return c;
}

std::string emit_config(const ScenarioConfig& c) {
    Json root = Json::object();
    root["schema_version"] = c.schema_version;
    root["n"] = c.n;
    std::visit(overloaded{
                   [&](const std::string& name) { root["beliefs"] = name; },
                   [&](const std::vector<double>& values) {
                       Json a = Json::array();
                       for (double v : values) a.push_back(real_json(v));
                       root["beliefs"] = std::move(a);
                   },
               },
               c.beliefs);
    root["influence"] = influence_json(c.influence);
    root["update"] = to_string(c.update);
    root["max_steps"] = c.max_steps;
    root["tolerance"] = real_json(c.tolerance);
    Json pol = Json::object();
    pol["K"] = real_json(c.scale);
    pol["alpha"] = real_json(c.alpha);
    Json discs = Json::array();
    for (const DiscretizationSpec& d : c.discretizations) {
        std::visit(overloaded{
                       [&](std::size_t bins) { discs.push_back(bins); },
                       [&](const std::vector<double>& bounds) {
                           Json a = Json::array();
                           for (double v : bounds) a.push_back(real_json(v));
                           discs.push_back(std::move(a));
                       },
                   },
                   d);
    }
    pol["discretizations"] = std::move(discs);
    root["polarization"] = std::move(pol);
    if (!c.notes.empty()) root["notes"] = c.notes;
    return root.dump(2) + "\n";
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("failed reading " + path.string());
    return parse_config(buffer.str());
}

void save_config(const ScenarioConfig& config, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << emit_config(config);
    if (!out) throw IoError("failed writing " + path.string());
}

ResolvedScenario resolve(const ScenarioConfig& config) {
    const std::size_t n = config.n;
    if (n == 0) throw ConfigError("$.n", "need at least one agent");

    BeliefPreset belief_preset = std::vector<double>{};
    if (const auto* name = std::get_if<std::string>(&config.beliefs)) {
        try {
            belief_preset = belief_shape_from_name(*name);
        } catch (const ModelError& e) {
            throw ConfigError("$.beliefs", e.what());
        }
    } else {
        const auto& values = std::get<std::vector<double>>(config.beliefs);
        if (values.size() != n) {
            throw ConfigError("$.beliefs", "expected " + std::to_string(n) + " values, got " +
                                               std::to_string(values.size()));
        }
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (!(values[i] >= 0.0 && values[i] <= 1.0)) {
                std::ostringstream os;
                os.precision(17);
                os << "belief " << values[i] << " outside [0,1]";
                throw ConfigError(at_index("$.beliefs", i), os.str());
            }
        }
        belief_preset = values;
    }

    std::optional<BeliefConfig> beliefs;
    try {
        beliefs.emplace(initial_beliefs(belief_preset, n));
    } catch (const ModelError& e) {
        throw ConfigError("$.beliefs", e.what());
    }
    InfluenceGraph graph = resolve_graph(config);

    SimulationOptions options;
    options.kind = config.update;
    options.max_steps = config.max_steps;
    if (!(config.tolerance > 0.0)) throw ConfigError("$.tolerance", "must be positive");
    options.tolerance = config.tolerance;
    try {
        options.params = PolarizationParams(config.scale, config.alpha);
    } catch (const ModelError& e) {
        throw ConfigError("$.polarization", e.what());
    }
    options.discretizations.clear();
    for (std::size_t k = 0; k < config.discretizations.size(); ++k) {
        const std::string p = at_index("$.polarization.discretizations", k);
        try {
            options.discretizations.push_back(std::visit(
                overloaded{
                    [](std::size_t bins) { return Discretization::equal_width(bins); },
                    [](const std::vector<double>& bounds) { return Discretization(bounds); },
                },
                config.discretizations[k]));
        } catch (const ModelError& e) {
            throw ConfigError(p, e.what());
        }
    }
    if (options.discretizations.empty()) {
        throw ConfigError("$.polarization.discretizations", "need at least one discretization");
    }
    return {std::move(*beliefs), std::move(graph), std::move(options)};
}

}  // namespace beliefpol
