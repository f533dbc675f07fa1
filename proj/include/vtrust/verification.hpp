#pragma once

// Exhaustive and randomized checks of the algebraic and ordering laws the
// trust model is built on.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vtrust/delegation.hpp"
#include "vtrust/generator.hpp"

namespace vtrust {

struct LawTally {
    std::uint64_t checked = 0;
    std::uint64_t counterexamples = 0;
    /// First few failing instances, human readable.
    std::vector<std::string> samples;
};

/// Which opposition relations the proposition suite enumerates.
enum class RelationClass {
    /// Every symmetric irreflexive relation.
    all,
    /// Only relations in which each value has at most one opposing value.
    single_opposite,
};

[[nodiscard]] std::string_view to_string(RelationClass relations);
[[nodiscard]] RelationClass parse_relation_class(std::string_view name);

struct PropositionReport {
    std::size_t max_universe = 0;
    RelationClass relations = RelationClass::all;
    std::uint64_t relations_checked = 0;
    /// Keyed by law name, e.g. "intersection_consistent", "bold_ge_cautious".
    std::map<std::string, LawTally> laws;

    [[nodiscard]] std::uint64_t total_counterexamples() const;
    [[nodiscard]] bool passed() const { return total_counterexamples() == 0; }
};

struct PropositionConfig {
    /// Every universe with 0..max_universe values and every opposition
    /// relation on it is enumerated.
    std::size_t max_universe = 5;
    RelationClass relations = RelationClass::all;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Checks, over every subset pair/triple of every enumerated universe:
///  - intersection_consistent: V ∩ W consistent when V or W is
///  - conflict_consistent: V ⊥ W consistent when V or W is
///  - conflict_inconsistent_iff: V ⊥ W inconsistent exactly when both are
///    inconsistent and some v in both has an opposing value in each
///    (each ~v may be a different opposing value)
///  - conflict_distributes_intersection / conflict_distributes_union
///  - independent_sign_laws (consistent pairs)
/// and over consistent triples:
///  - bold_ge_cautious, semi_independent_ge_cautious,
///    conflict_free_ordering (cautious <= semi-independent <= bold)
[[nodiscard]] PropositionReport check_propositions(const PropositionConfig& config);

struct FuzzConfig {
    std::uint64_t seed = 1;
    std::size_t trials = 10'000;
    std::size_t max_agents = 8;
    std::size_t max_chain = 3;
    std::size_t max_values = 8;
    unsigned threads = 0;
};

struct GreedyViolation {
    std::size_t trial = 0;
    std::uint64_t trial_seed = 0;
    Scenario original;
    Scenario minimized;
    TheoremReport report;  // for `minimized`
};

struct FuzzReport {
    std::size_t trials = 0;
    std::size_t generation_failures = 0;
    std::size_t greedy_comparable = 0;
    std::size_t greedy_violations = 0;
    std::size_t oracle_comparable = 0;
    std::size_t oracle_violations = 0;
    std::size_t first_choice_agreements = 0;
    /// Greedy-vs-greedy violations in trial order, each minimized.
    std::vector<GreedyViolation> violations;
    /// Trials where the exhaustive bold optimum fell below greedy cautious.
    std::vector<std::size_t> oracle_failures;

    /// The asserted form only: oracle violations fail the campaign.
    [[nodiscard]] bool passed() const { return oracle_violations == 0; }
};

/// Config used for fuzz trial `trial`; sizes and densities are drawn from the
/// trial seed within the FuzzConfig bounds.
[[nodiscard]] GeneratorConfig fuzz_trial_config(const FuzzConfig& config, std::size_t trial);

[[nodiscard]] FuzzReport fuzz_theorem(const FuzzConfig& config);

/// Greedy shrinking: repeatedly drops agents (never the initiator), trailing
/// chain actions, capabilities, oppositions and values while `still_fails`
/// holds. Returns a scenario on which `still_fails` is true.
[[nodiscard]] Scenario minimize_scenario(const Scenario& scenario,
                                         const std::function<bool(const Scenario&)>& still_fails);

/// Greedy bold aggregate < greedy cautious aggregate, both chains complete.
[[nodiscard]] bool greedy_bold_loses(const Scenario& scenario);

}  // namespace vtrust
