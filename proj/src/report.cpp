#include "vtrust/report.hpp"

#include <sstream>

#include "json.hpp"
#include "vtrust/scenario_io.hpp"

namespace vtrust {

using json = nlohmann::ordered_json;

namespace {

json scenario_json(const Scenario& s) { return json::parse(serialize_scenario(s)); }

json optional_int(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

json optional_string(const std::optional<std::string>& v) { return v ? json(*v) : json(nullptr); }

json assessment_json(const Assessment& a, std::size_t step) {
    return {{"step", step},
            {"trustor", a.trustor.str()},
            {"trustee", a.trustee.str()},
            {"action", a.action.str()},
            {"mode", to_string(a.kind)},
            {"score", a.score.value}};
}

json sequence_json(const std::optional<TrustSequence>& seq) {
    if (!seq) return nullptr;
    json arr = json::array();
    for (std::size_t i = 0; i < seq->size(); ++i) arr.push_back(assessment_json((*seq)[i], i + 1));
    return arr;
}

json theorem_json(const TheoremReport& r) {
    std::optional<std::int64_t> oracle_q;
    std::optional<TrustSequence> oracle_seq;
    if (r.oracle_bold) {
        oracle_q = r.oracle_bold->aggregate;
        oracle_seq = r.oracle_bold->sequence;
    }
    return {{"q_bold", optional_int(r.bold.aggregate)},
            {"q_cautious", optional_int(r.cautious.aggregate)},
            {"comparable", r.comparable},
            {"holds", r.holds},
            {"first_choice_agrees", r.first_choice_agrees},
            {"bold_failure", optional_string(r.bold.failure)},
            {"cautious_failure", optional_string(r.cautious.failure)},
            {"q_oracle_bold", optional_int(oracle_q)},
            {"oracle_comparable", r.oracle_comparable},
            {"oracle_holds", r.oracle_holds},
            {"witness",
             {{"bold", sequence_json(r.bold.sequence)},
              {"cautious", sequence_json(r.cautious.sequence)},
              {"oracle_bold", sequence_json(oracle_seq)}}}};
}

json propositions_json(const PropositionReport& r) {
    json laws = json::object();
    for (const auto& [name, tally] : r.laws) {
        laws[name] = {{"checked", tally.checked},
                      {"counterexamples", tally.counterexamples},
                      {"samples", tally.samples}};
    }
    return {{"max_universe", r.max_universe},
            {"relations", to_string(r.relations)},
            {"relations_checked", r.relations_checked},
            {"passed", r.passed()},
            {"laws", std::move(laws)}};
}

json violation_json(const GreedyViolation& v) {
    return {{"trial", v.trial},
            {"generator_seed", v.trial_seed},
            {"minimized_scenario", scenario_json(v.minimized)},
            {"theorem_check", theorem_json(v.report)},
            {"original_scenario", scenario_json(v.original)}};
}

}  // namespace

bool RunReport::checks_passed() const {
    if (propositions && !propositions->passed()) return false;
    if (theorem && theorem->oracle_comparable && !theorem->oracle_holds) return false;
    return true;
}

ExitCode RunReport::exit_code() const {
    if (!complete()) return ExitCode::no_candidate;
    if (!checks_passed()) return ExitCode::check_failed;
    return ExitCode::ok;
}

RunReport run(const Scenario& scenario, const RunOptions& options) {
    Scenario effective = options.mode ? scenario.with_mode(*options.mode) : scenario;
    RunReport report{effective, trace_sequence(effective), std::nullopt, std::nullopt};
    if (options.check_theorem) report.theorem = theorem_check(effective, options.oracle_limits);
    if (options.check_props_max_universe) {
        report.propositions =
            check_propositions(
            {*options.check_props_max_universe, options.relations, options.threads});
    }
    return report;
}

std::string report_to_json(const RunReport& report) {
    const auto& s = report.scenario;
    json steps = json::array();
    for (std::size_t i = 0; i < report.trace.sequence.size(); ++i) {
        const auto& a = report.trace.sequence[i];
        json step = assessment_json(a, i + 1);
        if (s.weights()) step["weighted_score"] = combined_trust(std::nullopt, a.score, *s.weights());
        json table = json::object();
        for (const auto& [id, score] : report.trace.tables[i]) table[id.str()] = score.value;
        step["candidates"] = std::move(table);
        steps.push_back(std::move(step));
    }

    json root;
    root["format"] = kReportFormatVersion;
    root["scenario"] = scenario_json(s);
    root["mode"] = to_string(s.mode());
    root["status"] = report.complete() ? "complete" : "no_candidate";
    root["steps"] = std::move(steps);
    root["aggregate"] = report.aggregate();
    if (report.trace.failed_step) {
        std::size_t step = *report.trace.failed_step;
        const AgentId& trustor = report.trace.sequence.empty() ? s.initiator()
                                                                : report.trace.sequence.back().trustee;
        NoCandidateError err(step, s.action_at(step), trustor, report.trace.sequence);
        root["failure"] = {{"step", step},
                           {"action", s.action_at(step).str()},
                           {"trustor", trustor.str()},
                           {"message", err.what()}};
    }
    if (report.theorem) root["theorem_check"] = theorem_json(*report.theorem);
    if (report.propositions) root["proposition_check"] = propositions_json(*report.propositions);
    root["checks_passed"] = report.checks_passed();
    return root.dump(2) + "\n";
}

std::string report_to_csv(const RunReport& report) {
    std::ostringstream out;
    out << "step,trustor,trustee,action,mode,score\n";
    for (std::size_t i = 0; i < report.trace.sequence.size(); ++i) {
        const auto& a = report.trace.sequence[i];
        out << (i + 1) << ',' << a.trustor.str() << ',' << a.trustee.str() << ',' << a.action.str()
            << ',' << to_string(a.kind) << ',' << a.score.value << '\n';
    }
    out << "aggregate,,,,," << report.aggregate() << '\n';
    return out.str();
}

std::string theorem_report_to_json(const TheoremReport& report, int indent) {
    return theorem_json(report).dump(indent) + "\n";
}

std::string proposition_report_to_json(const PropositionReport& report, int indent) {
    return propositions_json(report).dump(indent) + "\n";
}

std::string fuzz_report_to_json(const FuzzReport& report, int indent) {
    json oracle_failures = report.oracle_failures;
    json violations = json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"trial", v.trial},
                              {"generator_seed", v.trial_seed},
                              {"q_bold", optional_int(v.report.bold.aggregate)},
                              {"q_cautious", optional_int(v.report.cautious.aggregate)}});
    }
    json root = {{"trials", report.trials},
                 {"generation_failures", report.generation_failures},
                 {"first_choice_agreements", report.first_choice_agreements},
                 {"greedy_comparable", report.greedy_comparable},
                 {"greedy_violations", report.greedy_violations},
                 {"oracle_comparable", report.oracle_comparable},
                 {"oracle_violations", report.oracle_violations},
                 {"oracle_failure_trials", std::move(oracle_failures)},
                 {"passed", report.passed()},
                 {"violations", std::move(violations)}};
    return root.dump(indent) + "\n";
}

std::string violation_to_json(const GreedyViolation& violation) {
    return violation_json(violation).dump(2) + "\n";
}

}  // namespace vtrust
