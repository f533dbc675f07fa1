#include <gtest/gtest.h>

#include "vtrust/generator.hpp"
#include "vtrust/scenario_io.hpp"

using namespace vtrust;

namespace {

const std::string kMinimal = R"({
  "version": "vtrust-scenario/1",
  "values": ["care", "speed"],
  "oppositions": [["care", "speed"]],
  "agents": [
    {"id": "A", "core_values": ["care"]},
    {"id": "B", "core_values": ["care", "speed"], "action_values": {"build": ["speed"]},
     "capabilities": ["build"]}
  ],
  "initiator": "A",
  "action_chain": ["build"],
  "mode": "bold"
})";

// Replaces the first occurrence of `from` in the minimal document.
std::string edit(const std::string& from, const std::string& to) {
    std::string text = kMinimal;
    auto pos = text.find(from);
    EXPECT_NE(pos, std::string::npos) << from;
    return text.replace(pos, from.size(), to);
}

ScenarioError rejection(const std::string& text) {
    try {
        (void)parse_scenario(text);
    } catch (const ScenarioError& e) {
        return e;
    }
    ADD_FAILURE() << "document was accepted:\n" << text;
    return ScenarioError(ScenarioError::Kind::io, "", "");
}

}  // namespace

TEST(ScenarioIo, LoadsTheDivergentChoiceFixture) {
    auto s = load_scenario(VTRUST_FIXTURES "/divergent_choice.json");
    EXPECT_EQ(s.agents().size(), 4u);
    EXPECT_EQ(s.initiator(), AgentId{"A"});
    EXPECT_EQ(s.action_chain(), (std::vector<ActionId>{ActionId{"build"}, ActionId{"paint"}}));
    EXPECT_EQ(s.mode(), TrustMode::cautious);
    EXPECT_EQ(s.universe().size(), 4u);
    EXPECT_FALSE(s.weights());
    EXPECT_TRUE(s.agent(AgentId{"D"}).can_execute(ActionId{"paint"}));
}

TEST(ScenarioIo, ParsesOptionalFields) {
    auto s = parse_scenario(kMinimal);
    const auto& b = s.agent(AgentId{"B"});
    EXPECT_EQ(b.values_for(ActionId{"build"}), s.universe().make_set({"speed"}));
    EXPECT_TRUE(s.agent(AgentId{"A"}).capabilities().empty());
    EXPECT_TRUE(s.universe().opposes(s.universe().id("care"), s.universe().id("speed")));

    auto weighted = parse_scenario(edit(R"("mode": "bold")",
                                        R"("mode": "bold", "weights": {"alpha": 2, "beta": 0.5})"));
    ASSERT_TRUE(weighted.weights());
    EXPECT_EQ(*weighted.weights(), (Weights{2.0, 0.5, 1.0}));
}

TEST(ScenarioIo, RejectsInconsistentActionValues) {
    auto e = rejection(edit(R"({"build": ["speed"]})", R"({"build": ["care", "speed"]})"));
    EXPECT_EQ(e.kind(), ScenarioError::Kind::semantic);
    EXPECT_EQ(e.where(), "/agents/1/action_values/build");
    EXPECT_NE(std::string(e.what()).find("inconsistent"), std::string::npos);
}

TEST(ScenarioIo, RejectsActionValuesOutsideTheCore) {
    auto e = rejection(edit(R"({"id": "A", "core_values": ["care"]})",
                            R"({"id": "A", "core_values": ["care"], "action_values": {"x": ["speed"]}})"));
    EXPECT_EQ(e.kind(), ScenarioError::Kind::semantic);
    EXPECT_EQ(e.where(), "/agents/0/action_values/x");
}

TEST(ScenarioIo, RejectsAnEmptyPopulation) {
    std::string text = kMinimal;
    auto begin = text.find("\"agents\": [");
    auto end = text.find("],\n  \"initiator\"");
    text.replace(begin, end + 1 - begin, "\"agents\": []");
    auto e = rejection(text);
    EXPECT_EQ(e.kind(), ScenarioError::Kind::semantic);
    EXPECT_EQ(e.where(), "/initiator");
}

TEST(ScenarioIo, ReportsParseErrorPositions) {
    auto e = rejection("{\n  \"version\": \"vtrust-scenario/1\",\n  \"values\": [\"a\",,]\n}");
    EXPECT_EQ(e.kind(), ScenarioError::Kind::parse);
    EXPECT_EQ(e.where().rfind("line 3, column ", 0), 0u) << e.where();
}

TEST(ScenarioIo, SchemaErrors) {
    auto unknown = rejection(edit(R"("mode": "bold")", R"("mode": "bold", "colour": "red")"));
    EXPECT_EQ(unknown.kind(), ScenarioError::Kind::schema);
    EXPECT_EQ(unknown.where(), "/colour");

    auto version = rejection(edit("vtrust-scenario/1", "vtrust-scenario/9"));
    EXPECT_EQ(version.kind(), ScenarioError::Kind::schema);
    EXPECT_EQ(version.where(), "/version");

    auto type = rejection(edit(R"("initiator": "A")", R"("initiator": 7)"));
    EXPECT_EQ(type.kind(), ScenarioError::Kind::schema);
    EXPECT_EQ(type.where(), "/initiator");

    auto missing = rejection(edit(R"("initiator": "A",)", ""));
    EXPECT_EQ(missing.kind(), ScenarioError::Kind::schema);

    auto pair = rejection(edit(R"([["care", "speed"]])", R"([["care"]])"));
    EXPECT_EQ(pair.kind(), ScenarioError::Kind::schema);
    EXPECT_EQ(pair.where(), "/oppositions/0");
}

TEST(ScenarioIo, SemanticErrors) {
    auto reflexive = rejection(edit(R"([["care", "speed"]])", R"([["care", "care"]])"));
    EXPECT_EQ(reflexive.kind(), ScenarioError::Kind::semantic);
    EXPECT_EQ(reflexive.where(), "/oppositions/0");

    auto unknown_value = rejection(edit(R"([["care", "speed"]])", R"([["care", "zeal"]])"));
    EXPECT_EQ(unknown_value.where(), "/oppositions/0/1");

    auto dup = rejection(edit(R"(["care", "speed"],)", R"(["care", "care"],)"));
    EXPECT_EQ(dup.kind(), ScenarioError::Kind::semantic);

    auto mode = rejection(edit(R"("mode": "bold")", R"("mode": "reckless")"));
    EXPECT_EQ(mode.where(), "/mode");

    auto chain = rejection(edit(R"("action_chain": ["build"])", R"("action_chain": [])"));
    EXPECT_EQ(chain.where(), "/action_chain");

    auto weight = rejection(edit(R"("mode": "bold")", R"("mode": "bold", "weights": {"gamma": -1})"));
    EXPECT_EQ(weight.kind(), ScenarioError::Kind::semantic);
    EXPECT_EQ(weight.where(), "/weights/gamma");
}

TEST(ScenarioIo, MissingFileIsAnIoError) {
    try {
        (void)load_scenario("/nonexistent/scenario.json");
        FAIL();
    } catch (const ScenarioError& e) {
        EXPECT_EQ(e.kind(), ScenarioError::Kind::io);
    }
}

TEST(ScenarioIo, SerializationIsCanonical) {
    auto s = parse_scenario(kMinimal);
    auto text = serialize_scenario(s);
    EXPECT_EQ(text.back(), '\n');
    EXPECT_EQ(serialize_scenario(parse_scenario(text)), text);
}

// Round trip over generated populations, weights included.
TEST(ScenarioIoProperty, RoundTripsGeneratedScenarios) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.n_values = 1 + seed % 12;
        cfg.n_agents = 2 + seed % 6;
        cfg.chain_length = 1 + seed % 4;
        cfg.opposition_density = (seed % 5) / 5.0;
        auto s = generate_population(cfg).scenario;
        if (seed % 3 == 0) {
            s = Scenario(s.universe(),
                         [&] {
                             std::vector<Agent> v;
                             for (const auto& [id, a] : s.agents()) v.push_back(a);
                             return v;
                         }(),
                         s.initiator(), s.action_chain(), s.mode(), Weights{0.25, 3.0, 1.5});
        }
        auto text = serialize_scenario(s);
        auto back = parse_scenario(text);
        ASSERT_EQ(back, s) << "seed " << seed;
        ASSERT_EQ(serialize_scenario(back), text);
    }
}
