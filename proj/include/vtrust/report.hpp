#pragma once

// Run reports and their JSON / CSV renderings. See docs/report-format.md.

#include <optional>
#include <string>
#include <string_view>

#include "vtrust/delegation.hpp"
#include "vtrust/verification.hpp"

namespace vtrust {

inline constexpr std::string_view kReportFormatVersion = "vtrust-report/1";

/// Process exit codes shared by every subcommand.
enum class ExitCode : int {
    ok = 0,
    usage = 1,
    invalid_input = 2,
    no_candidate = 3,
    check_failed = 4,
};

struct RunOptions {
    std::optional<TrustMode> mode;
    bool check_theorem = false;
    /// Runs the proposition suite up to this universe size when set.
    std::optional<std::size_t> check_props_max_universe;
    RelationClass relations = RelationClass::all;
    OracleLimits oracle_limits;
    unsigned threads = 0;
};

struct RunReport {
    Scenario scenario;
    TracedSequence trace;
    std::optional<TheoremReport> theorem;
    std::optional<PropositionReport> propositions;

    [[nodiscard]] bool complete() const { return !trace.failed_step; }
    /// Q over the assessments that were made.
    [[nodiscard]] std::int64_t aggregate() const { return aggregate_trust(trace.sequence); }
    /// The asserted checks: every proposition and the exhaustive-bold form
    /// of the bold-vs-cautious comparison.
    [[nodiscard]] bool checks_passed() const;
    [[nodiscard]] ExitCode exit_code() const;
};

[[nodiscard]] RunReport run(const Scenario& scenario, const RunOptions& options = {});

[[nodiscard]] std::string report_to_json(const RunReport& report);
/// step,trustor,trustee,action,mode,score rows plus a final aggregate row.
[[nodiscard]] std::string report_to_csv(const RunReport& report);

[[nodiscard]] std::string theorem_report_to_json(const TheoremReport& report, int indent = 2);
[[nodiscard]] std::string proposition_report_to_json(const PropositionReport& report, int indent = 2);
[[nodiscard]] std::string fuzz_report_to_json(const FuzzReport& report, int indent = 2);
/// Standalone counterexample document for one greedy-vs-greedy violation.
[[nodiscard]] std::string violation_to_json(const GreedyViolation& violation);

}  // namespace vtrust
