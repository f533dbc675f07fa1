#pragma once

// Value-based trust assessment between agents.
//
// Every score is a signed count difference: values shared minus values in
// conflict. Three-agent forms score a candidate C for B, where B is acting on
// behalf of A. All value sets passed in must be consistent; inconsistent input
// is rejected with DomainError rather than repaired.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "vtrust/value_algebra.hpp"

namespace vtrust {

/// Interned agent name. Totally ordered by name.
class AgentId {
public:
    AgentId() = default;
    explicit AgentId(std::string name);
    [[nodiscard]] const std::string& str() const { return name_; }
    friend auto operator<=>(const AgentId&, const AgentId&) = default;

private:
    std::string name_;
};

class ActionId {
public:
    ActionId() = default;
    explicit ActionId(std::string name);
    [[nodiscard]] const std::string& str() const { return name_; }
    friend auto operator<=>(const ActionId&, const ActionId&) = default;

private:
    std::string name_;
};

struct TrustScore {
    std::int64_t value = 0;

    friend constexpr auto operator<=>(TrustScore, TrustScore) = default;
    friend constexpr TrustScore operator+(TrustScore a, TrustScore b) { return {a.value + b.value}; }
    friend constexpr TrustScore operator-(TrustScore a, TrustScore b) { return {a.value - b.value}; }
};

/// Weighting factors. Finite and nonnegative; unit weights by default.
struct Weights {
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 1.0;

    /// Throws DomainError if any weight is negative or not finite.
    void validate() const;
    friend bool operator==(const Weights&, const Weights&) = default;
};

/// Values of an agent whose value state goes up / down when it executes an action.
struct ValueStateDelta {
    ValueSet up;
    ValueSet down;
};

/// An agent: its value set, per-action value sets and the actions it can execute.
///
/// Action value sets must be consistent subsets of the core values. An agent
/// may hold a value set for an action it cannot execute.
class Agent {
public:
    Agent(const ValueUniverse& universe, AgentId id, ValueSet core_values,
          std::map<ActionId, ValueSet> action_values, std::set<ActionId> capabilities);

    [[nodiscard]] const AgentId& id() const { return id_; }
    [[nodiscard]] const ValueSet& core_values() const { return core_values_; }
    [[nodiscard]] const std::map<ActionId, ValueSet>& action_values() const { return action_values_; }
    [[nodiscard]] const std::set<ActionId>& capabilities() const { return capabilities_; }
    [[nodiscard]] bool can_execute(const ActionId& action) const { return capabilities_.contains(action); }

    /// The action value set for `action`, falling back to the core values
    /// when the agent has no dedicated entry.
    [[nodiscard]] const ValueSet& values_for(const ActionId& action) const;

    friend bool operator==(const Agent&, const Agent&) = default;

private:
    AgentId id_;
    ValueSet core_values_;
    std::map<ActionId, ValueSet> action_values_;
    std::set<ActionId> capabilities_;
};

/// |V_A ∩ V_B| − |V_A ⊥ V_B|
[[nodiscard]] TrustScore trust_independent(const ValueUniverse& universe, const ValueSet& requester,
                                           const ValueSet& candidate);

/// |(V_A ∩ V_B) ∩ V_C| − |(V_A ∪ V_B) ⊥ V_C|
[[nodiscard]] TrustScore trust_cautious(const ValueUniverse& universe, const ValueSet& principal,
                                        const ValueSet& delegator, const ValueSet& candidate);

/// |(V_A ∪ V_B) ∩ V_C| − |(V_A ∪ V_B) ⊥ V_C|. The union may be inconsistent.
[[nodiscard]] TrustScore trust_bold(const ValueUniverse& universe, const ValueSet& principal,
                                    const ValueSet& delegator, const ValueSet& candidate);

/// Same formula as the independent form, with the delegator's superseding
/// value set standing in for the requester.
[[nodiscard]] TrustScore trust_semi_independent(const ValueUniverse& universe,
                                                const ValueSet& delegator,
                                                const ValueSet& candidate);

/// Bold score minus the imbalance | |V_A ∩ V_C| − |V_B ∩ V_C| |, which
/// penalises candidates that carry forward far more of one principal's
/// values than the other's.
[[nodiscard]] TrustScore trust_bold_debiased(const ValueUniverse& universe,
                                             const ValueSet& principal, const ValueSet& delegator,
                                             const ValueSet& candidate);

/// α|(V_A ∩ V_B) ∩ up| − β|(V_A ∩ V_B) ∩ down| − γ|V_A ⊥ V_B|
[[nodiscard]] double trust_value_state(const ValueUniverse& universe, const ValueSet& requester,
                                       const ValueSet& candidate, const ValueStateDelta& delta,
                                       const Weights& weights = {});

/// α·reliability + β·knowledge, with absent reliability read as 0.
///
/// The two terms live on different scales (a probability and an unbounded
/// integer count); no normalisation is applied.
[[nodiscard]] double combined_trust(std::optional<double> reliability, TrustScore knowledge,
                                    const Weights& weights = {});

}  // namespace vtrust
