#include <gtest/gtest.h>

#include "vtrust/scenario_io.hpp"
#include "vtrust/verification.hpp"

using namespace vtrust;

TEST(Propositions, EnumeratesEveryRelation) {
    // Relations on n values: 2^(n(n-1)/2); summed over n = 0..4: 1+1+2+8+64.
    auto r = check_propositions({4, RelationClass::all, 1});
    EXPECT_EQ(r.relations_checked, 76u);
    EXPECT_EQ(r.laws.size(), 9u);
}

TEST(Propositions, SingleOppositeRelationsSatisfyEveryLaw) {
    // Matchings on n values, n = 0..5: 1+1+2+4+10+26.
    auto r = check_propositions({5, RelationClass::single_opposite, 0});
    EXPECT_EQ(r.relations_checked, 44u);
    for (const auto& [name, tally] : r.laws) {
        EXPECT_GT(tally.checked, 0u) << name;
        EXPECT_EQ(tally.counterexamples, 0u) << name;
    }
    EXPECT_TRUE(r.passed());
}

TEST(Propositions, FindsTheTriangleCounterexample) {
    // v0~v1, v0~v2, v1~v2: W = {v2} is consistent but {v0,v1} ⊥ W = {v0,v1} is not.
    auto r = check_propositions({3, RelationClass::all, 1});
    EXPECT_GT(r.laws.at("conflict_consistent").counterexamples, 0u);
    EXPECT_GT(r.laws.at("conflict_inconsistent_iff").counterexamples, 0u);
    EXPECT_FALSE(r.laws.at("conflict_consistent").samples.empty());
    for (const char* law : {"intersection_consistent", "conflict_distributes_intersection",
                            "conflict_distributes_union", "independent_sign_laws",
                            "bold_ge_cautious", "semi_independent_ge_cautious",
                            "conflict_free_ordering"}) {
        EXPECT_EQ(r.laws.at(law).counterexamples, 0u) << law;
    }
}

TEST(Propositions, ThreadCountDoesNotChangeTheResult) {
    auto one = check_propositions({4, RelationClass::all, 1});
    auto many = check_propositions({4, RelationClass::all, 4});
    for (const auto& [name, tally] : one.laws) {
        EXPECT_EQ(many.laws.at(name).checked, tally.checked) << name;
        EXPECT_EQ(many.laws.at(name).counterexamples, tally.counterexamples) << name;
        EXPECT_EQ(many.laws.at(name).samples, tally.samples) << name;
    }
}

TEST(Propositions, RefusesHugeUniverses) {
    EXPECT_THROW((void)check_propositions({7, RelationClass::all, 1}), SizeLimitError);
}

TEST(Fuzz, TrialConfigsStayInBounds) {
    FuzzConfig cfg;
    for (std::size_t t = 0; t < 500; ++t) {
        auto g = fuzz_trial_config(cfg, t);
        ASSERT_GE(g.n_agents, 2u);
        ASSERT_LE(g.n_agents, cfg.max_agents);
        ASSERT_GE(g.chain_length, 1u);
        ASSERT_LE(g.chain_length, cfg.max_chain);
        ASSERT_GE(g.n_values, 1u);
        ASSERT_LE(g.n_values, cfg.max_values);
    }
}

TEST(Fuzz, IsDeterministicAndIndependentOfThreads) {
    FuzzConfig cfg;
    cfg.trials = 600;
    cfg.seed = 77;
    cfg.threads = 1;
    auto a = fuzz_theorem(cfg);
    cfg.threads = 3;
    auto b = fuzz_theorem(cfg);
    EXPECT_EQ(a.trials, 600u);
    EXPECT_EQ(a.greedy_comparable, b.greedy_comparable);
    EXPECT_EQ(a.greedy_violations, b.greedy_violations);
    EXPECT_EQ(a.oracle_comparable, b.oracle_comparable);
    EXPECT_EQ(a.first_choice_agreements, b.first_choice_agreements);
    EXPECT_EQ(a.oracle_failures, b.oracle_failures);
    ASSERT_EQ(a.violations.size(), b.violations.size());
    for (std::size_t i = 0; i < a.violations.size(); ++i) {
        EXPECT_EQ(a.violations[i].trial, b.violations[i].trial);
        EXPECT_EQ(a.violations[i].minimized, b.violations[i].minimized);
    }
    EXPECT_EQ(a.oracle_violations, 0u);
}

TEST(Fuzz, GreedyViolationsAreMinimizedAndReproduce) {
    FuzzConfig cfg;  // the default campaign is known to contain a greedy-form violation
    auto r = fuzz_theorem(cfg);
    EXPECT_TRUE(r.passed());
    ASSERT_EQ(r.violations.size(), r.greedy_violations);
    ASSERT_FALSE(r.violations.empty());
    for (const auto& v : r.violations) {
        EXPECT_TRUE(greedy_bold_loses(v.original));
        EXPECT_TRUE(greedy_bold_loses(v.minimized));
        EXPECT_LE(v.minimized.agents().size(), v.original.agents().size());
        EXPECT_LE(v.minimized.universe().size(), v.original.universe().size());
        EXPECT_LT(*v.report.bold.aggregate, *v.report.cautious.aggregate);
        // Serialized artifacts reload to the same failing scenario.
        auto reloaded = parse_scenario(serialize_scenario(v.minimized));
        EXPECT_EQ(reloaded, v.minimized);
        EXPECT_TRUE(greedy_bold_loses(reloaded));
        // The exhaustive bold optimum still dominates.
        EXPECT_TRUE(v.report.oracle_holds);
    }
}

TEST(Minimizer, KeepsThePredicateTrue) {
    auto s = load_scenario(VTRUST_FIXTURES "/divergent_choice.json");
    // Predicate: bold chooses a different second delegate than cautious.
    auto differs = [](const Scenario& sc) {
        auto r = theorem_check(sc);
        return r.comparable && r.bold.sequence->size() >= 2 &&
               (*r.bold.sequence)[1].trustee != (*r.cautious.sequence)[1].trustee;
    };
    ASSERT_TRUE(differs(s));
    auto m = minimize_scenario(s, differs);
    EXPECT_TRUE(differs(m));
    EXPECT_LE(m.universe().size(), s.universe().size());
    EXPECT_EQ(m.agents().size(), 4u);  // every agent is needed for the divergence
}
