#include "vtrust/generator.hpp"

#include <random>

namespace vtrust {

namespace {

constexpr int kCapabilityRetries = 64;

/// Bernoulli draw from the raw engine output, so results do not depend on
/// the standard library's distribution implementations.
class Coin {
public:
    explicit Coin(std::uint64_t seed) : engine_(seed) {}

    bool flip(double p) {
        double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return u < p;
    }

private:
    std::mt19937_64 engine_;
};

std::string padded(char const* prefix, std::size_t index, std::size_t count) {
    std::size_t width = std::to_string(count > 0 ? count - 1 : 0).size();
    std::string digits = std::to_string(index);
    return prefix + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void GeneratorConfig::validate() const {
    if (n_values == 0 || n_agents == 0 || chain_length == 0) {
        throw DomainError("n_values, n_agents and chain_length must be positive");
    }
    if (n_values > kMaxValues) {
        throw DomainError("n_values exceeds " + std::to_string(kMaxValues));
    }
    for (double p : {opposition_density, value_density, capability_density}) {
        if (!(p >= 0.0 && p <= 1.0)) throw DomainError("densities must lie in [0, 1]");
    }
}

GeneratedScenario generate_population(const GeneratorConfig& config) {
    config.validate();
    Coin coin(config.seed);

    std::vector<std::string> value_names;
    for (std::size_t i = 0; i < config.n_values; ++i) {
        value_names.push_back(padded("v", i, config.n_values));
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < config.n_values; ++i) {
        for (std::size_t j = i + 1; j < config.n_values; ++j) {
            if (coin.flip(config.opposition_density)) pairs.emplace_back(value_names[i], value_names[j]);
        }
    }
    ValueUniverse universe(value_names, pairs);

    std::vector<ActionId> chain;
    for (std::size_t i = 0; i < config.chain_length; ++i) {
        chain.emplace_back(padded("act", i, config.chain_length));
    }
    std::vector<AgentId> ids;
    for (std::size_t i = 0; i < config.n_agents; ++i) ids.emplace_back(padded("A", i, config.n_agents));

    std::vector<ValueSet> cores(config.n_agents);
    for (auto& core : cores) {
        for (ValueId v : universe.all()) {
            if (coin.flip(config.value_density)) core.insert(v);
        }
    }

    std::vector<std::set<ActionId>> caps(config.n_agents);
    for (const auto& action : chain) {
        bool covered = false;
        for (int attempt = 0; attempt < kCapabilityRetries && !covered; ++attempt) {
            for (std::size_t a = 0; a < config.n_agents; ++a) {
                if (coin.flip(config.capability_density)) {
                    caps[a].insert(action);
                } else {
                    caps[a].erase(action);
                }
                covered = covered || (a != 0 && caps[a].contains(action));
            }
        }
        if (!covered) {
            throw GenerationError("seed " + std::to_string(config.seed) + ": no agent other than " +
                                  ids[0].str() + " became capable of '" + action.str() + "' after " +
                                  std::to_string(kCapabilityRetries) + " draws");
        }
    }

    std::vector<std::string> repairs;
    std::vector<Agent> agents;
    for (std::size_t a = 0; a < config.n_agents; ++a) {
        std::map<ActionId, ValueSet> action_values;
        for (const auto& action : chain) {
            ValueSet drawn;
            for (ValueId v : cores[a]) {
                if (coin.flip(config.value_density)) drawn.insert(v);
            }
            ValueSet kept;
            for (ValueId v : drawn) {
                if (universe.opposing(v).intersects(kept)) {
                    repairs.push_back(ids[a].str() + "/" + action.str() + ": dropped " +
                                      universe.name(v));
                } else {
                    kept.insert(v);
                }
            }
            action_values.emplace(action, kept);
        }
        agents.emplace_back(universe, ids[a], cores[a], std::move(action_values), caps[a]);
    }

    return GeneratedScenario{
        Scenario(std::move(universe), std::move(agents), ids[0], std::move(chain), config.mode),
        std::move(repairs)};
}

}  // namespace vtrust
