#include "vtrust/scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace vtrust {

using json = nlohmann::ordered_json;

ScenarioError::ScenarioError(Kind kind, std::string where, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + " error at " + where + ": " + message),
      kind_(kind),
      where_(std::move(where)) {}

std::string_view to_string(ScenarioError::Kind kind) {
    switch (kind) {
        case ScenarioError::Kind::io: return "io";
        case ScenarioError::Kind::parse: return "parse";
        case ScenarioError::Kind::schema: return "schema";
        case ScenarioError::Kind::semantic: return "semantic";
    }
    return "unknown";
}

namespace {

using Kind = ScenarioError::Kind;

std::string child(const std::string& path, std::string_view key) {
    return path + "/" + std::string(key);
}

std::string child(const std::string& path, std::size_t index) {
    return path + "/" + std::to_string(index);
}

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
    throw ScenarioError(Kind::schema, path.empty() ? "/" : path, message);
}

[[noreturn]] void semantic_error(const std::string& path, const std::string& message) {
    throw ScenarioError(Kind::semantic, path.empty() ? "/" : path, message);
}

const json& require_key(const json& obj, const std::string& path, std::string_view key) {
    auto it = obj.find(key);
    if (it == obj.end()) schema_error(path, "missing required field '" + std::string(key) + "'");
    return *it;
}

void require_known_keys(const json& obj, const std::string& path,
                        std::initializer_list<std::string_view> known) {
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (auto k : known) ok = ok || key == k;
        if (!ok) schema_error(child(path, key), "unknown field '" + key + "'");
    }
}

const json& require_object(const json& j, const std::string& path) {
    if (!j.is_object()) schema_error(path, "expected an object");
    return j;
}

const json& require_array(const json& j, const std::string& path) {
    if (!j.is_array()) schema_error(path, "expected an array");
    return j;
}

std::string require_string(const json& j, const std::string& path) {
    if (!j.is_string()) schema_error(path, "expected a string");
    return j.get<std::string>();
}

std::string require_token(const json& j, const std::string& path) {
    auto s = require_string(j, path);
    if (!is_valid_token(s)) semantic_error(path, "'" + s + "' is not a valid name");
    return s;
}

std::vector<std::string> require_string_list(const json& j, const std::string& path) {
    require_array(j, path);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(require_token(j[i], child(path, i)));
    return out;
}

ValueSet value_list(const ValueUniverse& universe, const json& j, const std::string& path) {
    require_array(j, path);
    ValueSet set;
    for (std::size_t i = 0; i < j.size(); ++i) {
        auto p = child(path, i);
        auto name = require_string(j[i], p);
        if (!universe.contains(name)) semantic_error(p, "unknown value '" + name + "'");
        set.insert(universe.id(name));
    }
    return set;
}

double weight_field(const json& obj, const std::string& path, std::string_view key) {
    auto it = obj.find(key);
    if (it == obj.end()) return 1.0;
    auto p = child(path, key);
    if (!it->is_number()) schema_error(p, "expected a number");
    double w = it->get<double>();
    if (!(w >= 0.0) || !std::isfinite(w)) semantic_error(p, "weight must be finite and nonnegative");
    return w;
}

ValueUniverse read_universe(const json& root) {
    auto names = require_string_list(require_key(root, "", "values"), "/values");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!seen.insert(names[i]).second) {
            semantic_error(child("/values", i), "duplicate value '" + names[i] + "'");
        }
    }
    if (names.size() > kMaxValues) {
        semantic_error("/values", "at most " + std::to_string(kMaxValues) + " values are supported");
    }

    std::vector<std::pair<std::string, std::string>> pairs;
    if (auto it = root.find("oppositions"); it != root.end()) {
        require_array(*it, "/oppositions");
        for (std::size_t i = 0; i < it->size(); ++i) {
            auto p = child("/oppositions", i);
            const json& pair = (*it)[i];
            if (!pair.is_array() || pair.size() != 2) {
                schema_error(p, "expected a 2-element array of value names");
            }
            auto a = require_string(pair[0], child(p, 0));
            auto b = require_string(pair[1], child(p, 1));
            if (!seen.contains(a)) semantic_error(child(p, 0), "unknown value '" + a + "'");
            if (!seen.contains(b)) semantic_error(child(p, 1), "unknown value '" + b + "'");
            if (a == b) semantic_error(p, "value '" + a + "' cannot oppose itself");
            pairs.emplace_back(a, b);
        }
    }
    return ValueUniverse(std::move(names), pairs);
}

Agent read_agent(const ValueUniverse& universe, const json& j, const std::string& path) {
    require_object(j, path);
    require_known_keys(j, path, {"id", "core_values", "action_values", "capabilities"});
    auto id = require_token(require_key(j, path, "id"), child(path, "id"));
    auto core_path = child(path, "core_values");
    ValueSet core = value_list(universe, require_key(j, path, "core_values"), core_path);

    std::map<ActionId, ValueSet> action_values;
    if (auto it = j.find("action_values"); it != j.end()) {
        auto av_path = child(path, "action_values");
        require_object(*it, av_path);
        for (const auto& [action, values] : it->items()) {
            auto p = child(av_path, action);
            if (!is_valid_token(action)) semantic_error(p, "'" + action + "' is not a valid action name");
            ValueSet set = value_list(universe, values, p);
            if (!set.is_subset_of(core)) {
                semantic_error(p, "action value set " + universe.format(set) +
                                      " is not a subset of the agent's core values " +
                                      universe.format(core));
            }
            if (!is_consistent(universe, set)) {
                semantic_error(p, "action value set " + universe.format(set) +
                                      " is inconsistent (an action value set may not contain "
                                      "opposing values)");
            }
            action_values.emplace(ActionId(action), set);
        }
    }

    std::set<ActionId> capabilities;
    if (auto it = j.find("capabilities"); it != j.end()) {
        for (auto& name : require_string_list(*it, child(path, "capabilities"))) {
            capabilities.emplace(std::move(name));
        }
    }
    return Agent(universe, AgentId(std::move(id)), core, std::move(action_values),
                 std::move(capabilities));
}

Scenario read_scenario(const json& root) {
    require_object(root, "");
    require_known_keys(root, "", {"version", "values", "oppositions", "agents", "initiator",
                                  "action_chain", "mode", "weights"});
    auto version = require_string(require_key(root, "", "version"), "/version");
    if (version != kScenarioFormatVersion) {
        schema_error("/version", "unsupported format version '" + version + "' (expected '" +
                                     std::string(kScenarioFormatVersion) + "')");
    }

    ValueUniverse universe = read_universe(root);

    const json& agents_json = require_array(require_key(root, "", "agents"), "/agents");
    std::vector<Agent> agents;
    std::set<std::string> ids;
    for (std::size_t i = 0; i < agents_json.size(); ++i) {
        auto p = child("/agents", i);
        agents.push_back(read_agent(universe, agents_json[i], p));
        if (!ids.insert(agents.back().id().str()).second) {
            semantic_error(child(p, "id"), "duplicate agent id '" + agents.back().id().str() + "'");
        }
    }

    auto initiator = require_token(require_key(root, "", "initiator"), "/initiator");
    if (!ids.contains(initiator)) {
        semantic_error("/initiator", agents.empty()
                                         ? "initiator '" + initiator + "' cannot be resolved: the population is empty"
                                         : "initiator '" + initiator + "' is not in the population");
    }

    auto chain_names = require_string_list(require_key(root, "", "action_chain"), "/action_chain");
    if (chain_names.empty()) semantic_error("/action_chain", "action chain must not be empty");
    std::vector<ActionId> chain;
    for (auto& n : chain_names) chain.emplace_back(std::move(n));

    auto mode_name = require_string(require_key(root, "", "mode"), "/mode");
    TrustMode mode;
    try {
        mode = parse_trust_mode(mode_name);
    } catch (const DomainError& e) {
        semantic_error("/mode", e.what());
    }

    std::optional<Weights> weights;
    if (auto it = root.find("weights"); it != root.end()) {
        require_object(*it, "/weights");
        require_known_keys(*it, "/weights", {"alpha", "beta", "gamma"});
        weights = Weights{weight_field(*it, "/weights", "alpha"), weight_field(*it, "/weights", "beta"),
                          weight_field(*it, "/weights", "gamma")};
    }

    return Scenario(std::move(universe), std::move(agents), AgentId(std::move(initiator)),
                    std::move(chain), mode, weights);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

json names_json(const ValueUniverse& universe, const ValueSet& set) {
    json arr = json::array();
    for (const auto& n : universe.names_of(set)) arr.push_back(n);
    return arr;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte);
        throw ScenarioError(Kind::parse,
                            "line " + std::to_string(line) + ", column " + std::to_string(column),
                            "malformed JSON");
    }
    try {
        return read_scenario(root);
    } catch (const DomainError& e) {
        throw ScenarioError(Kind::semantic, "/", e.what());
    }
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ScenarioError(Kind::io, path.string(), "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string serialize_scenario(const Scenario& scenario) {
    const auto& universe = scenario.universe();
    json root;
    root["version"] = kScenarioFormatVersion;
    root["values"] = universe.names();
    json pairs = json::array();
    for (auto [a, b] : universe.opposition_pairs()) {
        pairs.push_back(json::array({universe.name(a), universe.name(b)}));
    }
    root["oppositions"] = std::move(pairs);

    json agents = json::array();
    for (const auto& [id, agent] : scenario.agents()) {
        json a;
        a["id"] = id.str();
        a["core_values"] = names_json(universe, agent.core_values());
        json av = json::object();
        for (const auto& [action, values] : agent.action_values()) {
            av[action.str()] = names_json(universe, values);
        }
        a["action_values"] = std::move(av);
        json caps = json::array();
        for (const auto& c : agent.capabilities()) caps.push_back(c.str());
        a["capabilities"] = std::move(caps);
        agents.push_back(std::move(a));
    }
    root["agents"] = std::move(agents);
    root["initiator"] = scenario.initiator().str();
    json chain = json::array();
    for (const auto& a : scenario.action_chain()) chain.push_back(a.str());
    root["action_chain"] = std::move(chain);
    root["mode"] = to_string(scenario.mode());
    if (const auto& w = scenario.weights()) {
        root["weights"] = {{"alpha", w->alpha}, {"beta", w->beta}, {"gamma", w->gamma}};
    }
    return root.dump(2) + "\n";
}

}  // namespace vtrust
