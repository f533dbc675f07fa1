#include "vtrust/trust_assessment.hpp"

#include <cmath>
#include <cstdlib>

namespace vtrust {

namespace {

std::int64_t count(const ValueSet& s) { return static_cast<std::int64_t>(s.size()); }

void require_consistent(const ValueUniverse& universe, const ValueSet& set, const char* role) {
    if (!is_consistent(universe, set)) {
        throw DomainError(std::string(role) + " value set " + universe.format(set) +
                          " is inconsistent");
    }
}

}  // namespace

AgentId::AgentId(std::string name) : name_(std::move(name)) {
    if (!is_valid_token(name_)) throw DomainError("invalid agent id '" + name_ + "'");
}

ActionId::ActionId(std::string name) : name_(std::move(name)) {
    if (!is_valid_token(name_)) throw DomainError("invalid action id '" + name_ + "'");
}

void Weights::validate() const {
    for (double w : {alpha, beta, gamma}) {
        if (!std::isfinite(w) || w < 0.0) {
            throw DomainError("weights must be finite and nonnegative");
        }
    }
}

Agent::Agent(const ValueUniverse& universe, AgentId id, ValueSet core_values,
             std::map<ActionId, ValueSet> action_values, std::set<ActionId> capabilities)
    : id_(std::move(id)),
      core_values_(core_values),
      action_values_(std::move(action_values)),
      capabilities_(std::move(capabilities)) {
    universe.require_members(core_values_);
    for (const auto& [action, values] : action_values_) {
        universe.require_members(values);
        if (!values.is_subset_of(core_values_)) {
            throw DomainError("agent '" + id_.str() + "': action value set for '" + action.str() +
                              "' is not a subset of its core values");
        }
        if (!is_consistent(universe, values)) {
            throw DomainError("agent '" + id_.str() + "': action value set for '" + action.str() +
                              "' " + universe.format(values) + " is inconsistent");
        }
    }
}

const ValueSet& Agent::values_for(const ActionId& action) const {
    auto it = action_values_.find(action);
    return it == action_values_.end() ? core_values_ : it->second;
}

TrustScore trust_independent(const ValueUniverse& universe, const ValueSet& requester,
                             const ValueSet& candidate) {
    require_consistent(universe, requester, "requester");
    require_consistent(universe, candidate, "candidate");
    return {count(requester & candidate) - count(conflict_set(universe, requester, candidate))};
}

TrustScore trust_cautious(const ValueUniverse& universe, const ValueSet& principal,
                          const ValueSet& delegator, const ValueSet& candidate) {
    require_consistent(universe, principal, "principal");
    require_consistent(universe, delegator, "delegator");
    require_consistent(universe, candidate, "candidate");
    auto shared = (principal & delegator) & candidate;
    auto conflicts = conflict_set(universe, principal | delegator, candidate);
    return {count(shared) - count(conflicts)};
}

TrustScore trust_bold(const ValueUniverse& universe, const ValueSet& principal,
                      const ValueSet& delegator, const ValueSet& candidate) {
    require_consistent(universe, principal, "principal");
    require_consistent(universe, delegator, "delegator");
    require_consistent(universe, candidate, "candidate");
    auto joint = principal | delegator;
    return {count(joint & candidate) - count(conflict_set(universe, joint, candidate))};
}

TrustScore trust_semi_independent(const ValueUniverse& universe, const ValueSet& delegator,
                                  const ValueSet& candidate) {
    require_consistent(universe, delegator, "delegator");
    require_consistent(universe, candidate, "candidate");
    return {count(delegator & candidate) - count(conflict_set(universe, delegator, candidate))};
}

TrustScore trust_bold_debiased(const ValueUniverse& universe, const ValueSet& principal,
                               const ValueSet& delegator, const ValueSet& candidate) {
    TrustScore bold = trust_bold(universe, principal, delegator, candidate);
    std::int64_t imbalance = std::llabs(count(principal & candidate) - count(delegator & candidate));
    return {bold.value - imbalance};
}

double trust_value_state(const ValueUniverse& universe, const ValueSet& requester,
                         const ValueSet& candidate, const ValueStateDelta& delta,
                         const Weights& weights) {
    weights.validate();
    require_consistent(universe, requester, "requester");
    require_consistent(universe, candidate, "candidate");
    universe.require_members(delta.up);
    universe.require_members(delta.down);
    if (!delta.up.is_subset_of(candidate) || !delta.down.is_subset_of(candidate)) {
        throw DomainError("value state changes must be drawn from the candidate's value set");
    }
    if (delta.up.intersects(delta.down)) {
        throw DomainError("a value state cannot both increase and decrease");
    }
    auto shared = requester & candidate;
    auto raised = shared & delta.up;
    auto lowered = shared & delta.down;
    auto conflicts = conflict_set(universe, requester, candidate);
    return weights.alpha * static_cast<double>(raised.size()) -
           weights.beta * static_cast<double>(lowered.size()) -
           weights.gamma * static_cast<double>(conflicts.size());
}

double combined_trust(std::optional<double> reliability, TrustScore knowledge,
                      const Weights& weights) {
    weights.validate();
    double rel = reliability.value_or(0.0);
    if (!(rel >= 0.0 && rel <= 1.0)) throw DomainError("reliability must lie in [0, 1]");
    return weights.alpha * rel + weights.beta * static_cast<double>(knowledge.value);
}

}  // namespace vtrust
