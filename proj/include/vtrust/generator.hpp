#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vtrust/delegation.hpp"

namespace vtrust {

struct GeneratorConfig {
    std::uint64_t seed = 0;
    std::size_t n_values = 6;
    std::size_t n_agents = 5;
    std::size_t chain_length = 2;
    double opposition_density = 0.2;
    double value_density = 0.5;
    double capability_density = 0.5;
    TrustMode mode = TrustMode::cautious;

    /// Throws DomainError on zero sizes, more than kMaxValues values or a
    /// density outside [0, 1].
    void validate() const;
};

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GeneratedScenario {
    Scenario scenario;
    /// One line per value dropped to make an action value set consistent.
    std::vector<std::string> repairs;
};

/// Deterministic population generator: the output is a pure function of the
/// config, seed included.
///
/// Values are named v0.., agents A0.. and actions act0.., zero-padded so that
/// name order matches index order. A0 is the initiator. Every agent gets an
/// action value set for every chain action, drawn from its core values and
/// repaired to consistency by dropping the later-ordered member of each
/// opposing pair. Each chain action is guaranteed at least one capable agent
/// besides the initiator; its capabilities are redrawn a bounded number of
/// times before GenerationError is thrown.
[[nodiscard]] GeneratedScenario generate_population(const GeneratorConfig& config);

/// SplitMix64 step, used to derive independent per-trial seeds.
[[nodiscard]] std::uint64_t mix_seed(std::uint64_t seed);

}  // namespace vtrust
