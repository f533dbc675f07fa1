#pragma once

// Trust sequences: greedy delegation along an action chain, aggregate trust,
// an exhaustive best-sequence oracle and the bold-vs-cautious comparison.
//
// Step 1 is always scored with the independent form. At step i > 1 the
// trustor A_i scores each candidate X for a_i with the scenario's mode, where
//   principal = V_{A_{i-1}}^{a_{i-1}}   (the immediate requester)
//   delegator = V_{A_i}^{a_{i-1}}       (the action A_i was asked to do)
//   candidate = V_X^{a_i}

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vtrust/trust_assessment.hpp"

namespace vtrust {

enum class TrustMode { cautious, bold, semi_independent };

/// The formula actually used for one assessment.
enum class AssessmentKind { independent, cautious, bold, semi_independent };

[[nodiscard]] std::string_view to_string(TrustMode mode);
[[nodiscard]] std::string_view to_string(AssessmentKind kind);
/// Throws DomainError on an unknown name.
[[nodiscard]] TrustMode parse_trust_mode(std::string_view name);
[[nodiscard]] AssessmentKind parse_assessment_kind(std::string_view name);

struct Assessment {
    AgentId trustor;
    AgentId trustee;
    ActionId action;
    AssessmentKind kind = AssessmentKind::independent;
    TrustScore score;

    friend bool operator==(const Assessment&, const Assessment&) = default;
};

/// Unbranched chain of assessments; each trustee is the next trustor.
class TrustSequence {
public:
    TrustSequence() = default;

    /// Throws DomainError if the assessment does not continue the chain or
    /// has trustor == trustee.
    void append(Assessment a);

    [[nodiscard]] std::size_t size() const { return steps_.size(); }
    [[nodiscard]] bool empty() const { return steps_.empty(); }
    [[nodiscard]] const Assessment& operator[](std::size_t i) const { return steps_[i]; }
    [[nodiscard]] const Assessment& back() const { return steps_.back(); }
    [[nodiscard]] auto begin() const { return steps_.begin(); }
    [[nodiscard]] auto end() const { return steps_.end(); }

    friend bool operator==(const TrustSequence&, const TrustSequence&) = default;

private:
    std::vector<Assessment> steps_;
};

/// Population, chain and policy for one delegation run.
class Scenario {
public:
    Scenario(ValueUniverse universe, std::vector<Agent> agents, AgentId initiator,
             std::vector<ActionId> action_chain, TrustMode mode,
             std::optional<Weights> weights = std::nullopt);

    [[nodiscard]] const ValueUniverse& universe() const { return universe_; }
    [[nodiscard]] const std::map<AgentId, Agent>& agents() const { return agents_; }
    [[nodiscard]] const Agent& agent(const AgentId& id) const;
    [[nodiscard]] const AgentId& initiator() const { return initiator_; }
    [[nodiscard]] const std::vector<ActionId>& action_chain() const { return action_chain_; }
    [[nodiscard]] TrustMode mode() const { return mode_; }
    [[nodiscard]] const std::optional<Weights>& weights() const { return weights_; }

    /// 1-based; throws DomainError when out of range.
    [[nodiscard]] const ActionId& action_at(std::size_t step) const;

    [[nodiscard]] Scenario with_mode(TrustMode mode) const;

    friend bool operator==(const Scenario&, const Scenario&) = default;

private:
    ValueUniverse universe_;
    std::map<AgentId, Agent> agents_;
    AgentId initiator_;
    std::vector<ActionId> action_chain_;
    TrustMode mode_;
    std::optional<Weights> weights_;
};

using CandidateScores = std::map<AgentId, TrustScore>;

/// Raised when a step has no capable candidate. Carries the sequence built so far.
class NoCandidateError : public std::runtime_error {
public:
    NoCandidateError(std::size_t step, ActionId action, AgentId trustor, TrustSequence partial);

    [[nodiscard]] std::size_t step() const { return step_; }
    [[nodiscard]] const ActionId& action() const { return action_; }
    [[nodiscard]] const AgentId& trustor() const { return trustor_; }
    [[nodiscard]] const TrustSequence& partial() const { return partial_; }

private:
    std::size_t step_;
    ActionId action_;
    AgentId trustor_;
    TrustSequence partial_;
};

/// Scores every agent other than `trustor` that can execute a_step.
/// `predecessor_values` is ignored at step 1 and in semi-independent mode;
/// otherwise it must be present. Returns an empty map when nobody is capable.
[[nodiscard]] CandidateScores candidate_scores(const Scenario& scenario, std::size_t step,
                                               const AgentId& trustor,
                                               const std::optional<ValueSet>& predecessor_values);

/// Highest score wins, ties go to the smallest AgentId. Negative maxima are
/// still selected. Throws NoCandidateError when `scores` is empty.
[[nodiscard]] AgentId select_next(const CandidateScores& scores, std::size_t step,
                                  const ActionId& action);

struct TracedSequence {
    TrustSequence sequence;
    /// tables[i] holds the candidate scores considered at step i + 1.
    std::vector<CandidateScores> tables;
    /// Set when the chain stopped early.
    std::optional<std::size_t> failed_step;
};

/// Greedy construction that records every candidate table and stops at the
/// first step without candidates instead of throwing.
[[nodiscard]] TracedSequence trace_sequence(const Scenario& scenario);

/// Greedy construction. Throws NoCandidateError with the partial sequence.
[[nodiscard]] TrustSequence build_sequence(const Scenario& scenario);

/// Sum of scores over the 1-based inclusive range [from, to].
[[nodiscard]] std::int64_t aggregate_trust(const TrustSequence& sequence, std::size_t from,
                                           std::size_t to);
/// Q(S): the aggregate over the whole sequence.
[[nodiscard]] std::int64_t aggregate_trust(const TrustSequence& sequence);

struct OracleLimits {
    /// Upper bound on (agents - 1)^chain_length, the number of paths explored.
    std::uint64_t max_paths = 1'000'000;
};

struct OracleResult {
    TrustSequence sequence;
    std::int64_t aggregate = 0;
    std::uint64_t paths_explored = 0;
};

/// Exhaustively tries every capable delegate at every step under the
/// scenario's mode and returns a complete sequence with maximal aggregate.
/// Among equal aggregates the lexicographically smallest trustee list wins.
/// Throws SizeLimitError past `limits`, NoCandidateError if no complete path exists.
[[nodiscard]] OracleResult oracle_best_sequence(const Scenario& scenario,
                                                const OracleLimits& limits = {});

struct ModeOutcome {
    std::optional<TrustSequence> sequence;
    std::optional<std::int64_t> aggregate;
    /// Message of the no-candidate failure, when the greedy chain broke.
    std::optional<std::string> failure;
};

struct TheoremReport {
    ModeOutcome bold;
    ModeOutcome cautious;
    /// Both greedy chains completed, so `holds` is meaningful.
    bool comparable = false;
    /// Greedy bold aggregate >= greedy cautious aggregate.
    bool holds = false;
    /// Greedy chains chose the same first delegate.
    bool first_choice_agrees = false;

    std::optional<OracleResult> oracle_bold;
    bool oracle_comparable = false;
    /// Best bold aggregate >= greedy cautious aggregate.
    bool oracle_holds = false;
};

/// Runs greedy bold and greedy cautious on the same population and compares
/// their aggregates, and also compares the exhaustive best bold sequence
/// against greedy cautious. Per-mode failures are recorded, not thrown.
[[nodiscard]] TheoremReport theorem_check(const Scenario& scenario, const OracleLimits& limits = {});

}  // namespace vtrust
