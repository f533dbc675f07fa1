#include "vtrust/delegation.hpp"

#include <algorithm>
#include <functional>

namespace vtrust {

std::string_view to_string(TrustMode mode) {
    switch (mode) {
        case TrustMode::cautious: return "cautious";
        case TrustMode::bold: return "bold";
        case TrustMode::semi_independent: return "semi_independent";
    }
    return "unknown";
}

std::string_view to_string(AssessmentKind kind) {
    switch (kind) {
        case AssessmentKind::independent: return "independent";
        case AssessmentKind::cautious: return "cautious";
        case AssessmentKind::bold: return "bold";
        case AssessmentKind::semi_independent: return "semi_independent";
    }
    return "unknown";
}

TrustMode parse_trust_mode(std::string_view name) {
    if (name == "cautious") return TrustMode::cautious;
    if (name == "bold") return TrustMode::bold;
    if (name == "semi_independent") return TrustMode::semi_independent;
    throw DomainError("unknown trust mode '" + std::string(name) +
                      "' (expected cautious, bold or semi_independent)");
}

AssessmentKind parse_assessment_kind(std::string_view name) {
    if (name == "independent") return AssessmentKind::independent;
    return static_cast<AssessmentKind>(static_cast<int>(parse_trust_mode(name)) + 1);
}

namespace {

AssessmentKind kind_for(TrustMode mode) {
    switch (mode) {
        case TrustMode::cautious: return AssessmentKind::cautious;
        case TrustMode::bold: return AssessmentKind::bold;
        case TrustMode::semi_independent: return AssessmentKind::semi_independent;
    }
    return AssessmentKind::independent;
}

std::string no_candidate_message(std::size_t step, const ActionId& action, const AgentId& trustor) {
    if (trustor.str().empty()) {
        return "step " + std::to_string(step) + ": no candidate can execute action '" +
               action.str() + "'";
    }
    return "step " + std::to_string(step) + ": no agent other than '" + trustor.str() +
           "' can execute action '" + action.str() + "'";
}

}  // namespace

void TrustSequence::append(Assessment a) {
    if (a.trustor == a.trustee) {
        throw DomainError("agent '" + a.trustor.str() + "' cannot assess trust in itself");
    }
    if (!steps_.empty() && steps_.back().trustee != a.trustor) {
        throw DomainError("assessment by '" + a.trustor.str() + "' does not continue the chain at '" +
                          steps_.back().trustee.str() + "'");
    }
    steps_.push_back(std::move(a));
}

Scenario::Scenario(ValueUniverse universe, std::vector<Agent> agents, AgentId initiator,
                   std::vector<ActionId> action_chain, TrustMode mode,
                   std::optional<Weights> weights)
    : universe_(std::move(universe)),
      initiator_(std::move(initiator)),
      action_chain_(std::move(action_chain)),
      mode_(mode),
      weights_(weights) {
    for (auto& agent : agents) {
        universe_.require_members(agent.core_values());
        AgentId id = agent.id();
        if (!agents_.emplace(id, std::move(agent)).second) {
            throw DomainError("duplicate agent id '" + id.str() + "'");
        }
    }
    if (!agents_.contains(initiator_)) {
        throw DomainError("initiator '" + initiator_.str() + "' is not in the population");
    }
    if (action_chain_.empty()) throw DomainError("action chain is empty");
    if (weights_) weights_->validate();
}

const Agent& Scenario::agent(const AgentId& id) const {
    auto it = agents_.find(id);
    if (it == agents_.end()) throw DomainError("unknown agent '" + id.str() + "'");
    return it->second;
}

const ActionId& Scenario::action_at(std::size_t step) const {
    if (step < 1 || step > action_chain_.size()) {
        throw DomainError("step " + std::to_string(step) + " is outside the action chain (length " +
                          std::to_string(action_chain_.size()) + ")");
    }
    return action_chain_[step - 1];
}

Scenario Scenario::with_mode(TrustMode mode) const {
    Scenario copy = *this;
    copy.mode_ = mode;
    return copy;
}

NoCandidateError::NoCandidateError(std::size_t step, ActionId action, AgentId trustor,
                                   TrustSequence partial)
    : std::runtime_error(no_candidate_message(step, action, trustor)),
      step_(step),
      action_(std::move(action)),
      trustor_(std::move(trustor)),
      partial_(std::move(partial)) {}

CandidateScores candidate_scores(const Scenario& scenario, std::size_t step, const AgentId& trustor,
                                 const std::optional<ValueSet>& predecessor_values) {
    const ActionId& action = scenario.action_at(step);
    const Agent& self = scenario.agent(trustor);
    const auto& universe = scenario.universe();
    const bool needs_predecessor = step > 1 && scenario.mode() != TrustMode::semi_independent;
    if (needs_predecessor && !predecessor_values) {
        throw DomainError("step " + std::to_string(step) + " requires the predecessor's value set");
    }

    // At step 1 the trustor scores with its own set for a_1; later it acts on
    // the set for the action it was asked to perform.
    const ValueSet& own = step == 1 ? self.values_for(action)
                                    : self.values_for(scenario.action_at(step - 1));

    CandidateScores scores;
    for (const auto& [id, agent] : scenario.agents()) {
        if (id == trustor || !agent.can_execute(action)) continue;
        const ValueSet& theirs = agent.values_for(action);
        TrustScore s;
        if (step == 1) {
            s = trust_independent(universe, own, theirs);
        } else {
            switch (scenario.mode()) {
                case TrustMode::cautious:
                    s = trust_cautious(universe, *predecessor_values, own, theirs);
                    break;
                case TrustMode::bold:
                    s = trust_bold(universe, *predecessor_values, own, theirs);
                    break;
                case TrustMode::semi_independent:
                    s = trust_semi_independent(universe, own, theirs);
                    break;
            }
        }
        scores.emplace(id, s);
    }
    return scores;
}

AgentId select_next(const CandidateScores& scores, std::size_t step, const ActionId& action) {
    if (scores.empty()) {
        throw NoCandidateError(step, action, AgentId{}, TrustSequence{});
    }
    auto best = scores.begin();
    for (auto it = std::next(best); it != scores.end(); ++it) {
        if (it->second > best->second) best = it;
    }
    return best->first;
}

TracedSequence trace_sequence(const Scenario& scenario) {
    TracedSequence trace;
    AgentId trustor = scenario.initiator();
    std::optional<ValueSet> predecessor;
    for (std::size_t step = 1; step <= scenario.action_chain().size(); ++step) {
        const ActionId& action = scenario.action_at(step);
        auto scores = candidate_scores(scenario, step, trustor, predecessor);
        trace.tables.push_back(scores);
        if (scores.empty()) {
            trace.failed_step = step;
            return trace;
        }
        AgentId next = select_next(scores, step, action);
        trace.sequence.append(Assessment{
            trustor, next, action,
            step == 1 ? AssessmentKind::independent : kind_for(scenario.mode()), scores.at(next)});
        predecessor = scenario.agent(trustor).values_for(action);
        trustor = std::move(next);
    }
    return trace;
}

TrustSequence build_sequence(const Scenario& scenario) {
    auto trace = trace_sequence(scenario);
    if (trace.failed_step) {
        std::size_t step = *trace.failed_step;
        AgentId trustor = trace.sequence.empty() ? scenario.initiator() : trace.sequence.back().trustee;
        throw NoCandidateError(step, scenario.action_at(step), std::move(trustor),
                               std::move(trace.sequence));
    }
    return std::move(trace.sequence);
}

std::int64_t aggregate_trust(const TrustSequence& sequence, std::size_t from, std::size_t to) {
    if (from < 1 || from > to || to > sequence.size()) {
        throw DomainError("aggregate range [" + std::to_string(from) + ", " + std::to_string(to) +
                          "] is invalid for a sequence of length " +
                          std::to_string(sequence.size()));
    }
    std::int64_t total = 0;
    for (std::size_t i = from - 1; i < to; ++i) total += sequence[i].score.value;
    return total;
}

std::int64_t aggregate_trust(const TrustSequence& sequence) {
    if (sequence.empty()) return 0;
    return aggregate_trust(sequence, 1, sequence.size());
}

OracleResult oracle_best_sequence(const Scenario& scenario, const OracleLimits& limits) {
    const std::size_t chain = scenario.action_chain().size();
    const std::uint64_t branching = scenario.agents().size() > 1 ? scenario.agents().size() - 1 : 1;
    std::uint64_t paths = 1;
    for (std::size_t i = 0; i < chain; ++i) {
        if (paths > limits.max_paths / branching) {
            throw SizeLimitError("exhaustive search over " + std::to_string(scenario.agents().size()) +
                                 " agents and a chain of " + std::to_string(chain) +
                                 " actions exceeds the limit of " +
                                 std::to_string(limits.max_paths) + " paths");
        }
        paths *= branching;
    }

    std::optional<OracleResult> best;
    std::uint64_t explored = 0;
    TrustSequence current;
    std::optional<NoCandidateError> deepest_failure;
    std::int64_t running = 0;

    std::function<void(std::size_t, const AgentId&, const std::optional<ValueSet>&)> visit =
        [&](std::size_t step, const AgentId& trustor, const std::optional<ValueSet>& predecessor) {
            if (step > chain) {
                ++explored;
                if (!best || running > best->aggregate) best = OracleResult{current, running, 0};
                return;
            }
            const ActionId& action = scenario.action_at(step);
            auto scores = candidate_scores(scenario, step, trustor, predecessor);
            if (scores.empty()) {
                if (!deepest_failure || deepest_failure->step() < step) {
                    deepest_failure.emplace(step, action, trustor, current);
                }
                return;
            }
            auto kind = step == 1 ? AssessmentKind::independent : kind_for(scenario.mode());
            std::optional<ValueSet> next_predecessor = scenario.agent(trustor).values_for(action);
            for (const auto& [candidate, score] : scores) {
                TrustSequence saved = current;
                current.append(Assessment{trustor, candidate, action, kind, score});
                running += score.value;
                visit(step + 1, candidate, next_predecessor);
                running -= score.value;
                current = std::move(saved);
            }
        };
    visit(1, scenario.initiator(), std::nullopt);

    if (!best) throw *deepest_failure;
    best->paths_explored = explored;
    return *best;
}

TheoremReport theorem_check(const Scenario& scenario, const OracleLimits& limits) {
    TheoremReport report;
    auto run_mode = [](const Scenario& s) {
        ModeOutcome outcome;
        try {
            outcome.sequence = build_sequence(s);
            outcome.aggregate = aggregate_trust(*outcome.sequence);
        } catch (const NoCandidateError& e) {
            outcome.failure = e.what();
        }
        return outcome;
    };
    const Scenario bold = scenario.with_mode(TrustMode::bold);
    report.bold = run_mode(bold);
    report.cautious = run_mode(scenario.with_mode(TrustMode::cautious));

    report.comparable = report.bold.aggregate && report.cautious.aggregate;
    report.holds = report.comparable && *report.bold.aggregate >= *report.cautious.aggregate;
    report.first_choice_agrees = report.bold.sequence && report.cautious.sequence &&
                                 (*report.bold.sequence)[0].trustee ==
                                     (*report.cautious.sequence)[0].trustee;

    try {
        report.oracle_bold = oracle_best_sequence(bold, limits);
    } catch (const NoCandidateError&) {
        report.oracle_bold.reset();
    }
    report.oracle_comparable = report.oracle_bold && report.cautious.aggregate;
    report.oracle_holds =
        report.oracle_comparable && report.oracle_bold->aggregate >= *report.cautious.aggregate;
    return report;
}

}  // namespace vtrust
