#include <gtest/gtest.h>

#include <random>

#include "naive_model.hpp"
#include "vtrust/value_algebra.hpp"

using namespace vtrust;

namespace {

// ~a = {b, c}, d unrelated.
ValueUniverse abcd() { return ValueUniverse({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}}); }

// a~b, used by the distributivity and associativity counterexamples.
ValueUniverse ab() { return ValueUniverse({"a", "b"}, {{"a", "b"}}); }

}  // namespace

TEST(ValueUniverse, SortsNamesAndAssignsIdsInNameOrder) {
    ValueUniverse u({"zeal", "beauty", "care"}, {});
    EXPECT_EQ(u.names(), (std::vector<std::string>{"beauty", "care", "zeal"}));
    EXPECT_LT(u.id("beauty"), u.id("care"));
    EXPECT_LT(u.id("care"), u.id("zeal"));
    EXPECT_EQ(u.name(u.id("zeal")), "zeal");
}

TEST(ValueUniverse, OppositionIsSymmetric) {
    auto u = abcd();
    EXPECT_TRUE(u.opposes(u.id("a"), u.id("b")));
    EXPECT_TRUE(u.opposes(u.id("b"), u.id("a")));
    EXPECT_FALSE(u.opposes(u.id("b"), u.id("c")));
    EXPECT_EQ(opposing_set(u, u.id("a")), u.make_set({"b", "c"}));
    EXPECT_EQ(opposing_set(u, u.id("b")), u.make_set({"a"}));
    EXPECT_TRUE(opposing_set(u, u.id("d")).empty());
}

TEST(ValueUniverse, DuplicatePairsCollapse) {
    ValueUniverse u({"a", "b"}, {{"a", "b"}, {"b", "a"}, {"a", "b"}});
    ASSERT_EQ(u.opposition_pairs().size(), 1u);
    EXPECT_EQ(u.opposition_pairs()[0], std::make_pair(u.id("a"), u.id("b")));
}

TEST(ValueUniverse, RejectsMalformedInput) {
    EXPECT_THROW(ValueUniverse({"a", "a"}, {}), DomainError);
    EXPECT_THROW(ValueUniverse({"a", ""}, {}), DomainError);
    EXPECT_THROW(ValueUniverse({"a", "b c"}, {}), DomainError);
    EXPECT_THROW(ValueUniverse({"a"}, {{"a", "a"}}), DomainError);
    EXPECT_THROW(ValueUniverse({"a"}, {{"a", "z"}}), DomainError);
    std::vector<std::string> many;
    for (std::size_t i = 0; i <= kMaxValues; ++i) many.push_back("v" + std::to_string(i));
    EXPECT_THROW(ValueUniverse(many, {}), DomainError);
}

TEST(ValueUniverse, UnknownValuesAreDomainErrors) {
    auto u = abcd();
    EXPECT_THROW((void)u.id("zz"), DomainError);
    EXPECT_THROW((void)opposing_set(u, ValueId{9}), DomainError);
    ValueSet foreign{ValueId{7}};
    EXPECT_THROW((void)is_consistent(u, foreign), DomainError);
    EXPECT_THROW((void)conflict_set(u, foreign, {}), DomainError);
}

TEST(ValueSet, BasicOperations) {
    ValueSet s{ValueId{3}, ValueId{0}, ValueId{200}};
    EXPECT_EQ(s.size(), 3u);
    EXPECT_TRUE(s.contains(ValueId{200}));
    EXPECT_EQ(s.extent(), 201u);
    std::vector<std::uint16_t> order;
    for (auto id : s) order.push_back(id.index);
    EXPECT_EQ(order, (std::vector<std::uint16_t>{0, 3, 200}));
    s.erase(ValueId{200});
    EXPECT_EQ(s.extent(), 4u);
    EXPECT_EQ(ValueSet::from_mask(0b1001), (ValueSet{ValueId{0}, ValueId{3}}));
    EXPECT_TRUE(ValueSet{}.empty());
    EXPECT_EQ(ValueSet{}.extent(), 0u);
}

TEST(Consistency, ExamplesFromTheIntersectionDiscussion) {
    // V = {a, b} with b = ~a, W = {a, c, d} with d = ~c: both inconsistent,
    // yet V ∩ W = {a} is consistent.
    ValueUniverse u({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    auto v = u.make_set({"a", "b"});
    auto w = u.make_set({"a", "c", "d"});
    EXPECT_FALSE(is_consistent(u, v));
    EXPECT_FALSE(is_consistent(u, w));
    EXPECT_TRUE(is_consistent(u, v & w));

    // {a} and {b} are consistent but their union is not.
    auto a = u.make_set({"a"});
    auto b = u.make_set({"b"});
    EXPECT_TRUE(is_consistent(u, a));
    EXPECT_TRUE(is_consistent(u, b));
    EXPECT_FALSE(is_consistent(u, a | b));
    EXPECT_TRUE(is_consistent(u, {}));
}

TEST(ConflictSet, IsDirectional) {
    auto u = abcd();
    auto v = u.make_set({"a"});
    auto w = u.make_set({"b", "c", "d"});
    EXPECT_EQ(conflict_set(u, v, w), u.make_set({"a"}));
    EXPECT_EQ(conflict_set(u, w, v), u.make_set({"b", "c"}));
}

TEST(ConflictSet, EmptyAndSelfCases) {
    auto u = abcd();
    auto v = u.make_set({"a", "d"});
    EXPECT_TRUE(conflict_set(u, v, {}).empty());
    EXPECT_TRUE(conflict_set(u, {}, v).empty());
    EXPECT_TRUE(conflict_set(u, v, v).empty());
    auto bad = u.make_set({"a", "b"});
    EXPECT_EQ(conflict_set(u, bad, bad), bad);
}

// V = {a}, V' = {b}, V'' = {a}, b = ~a.
TEST(ConflictSet, UnionDoesNotDistributeOverConflict) {
    auto u = ab();
    auto v = u.make_set({"a"}), v1 = u.make_set({"b"}), v2 = u.make_set({"a"});
    auto lhs = conflict_set(u, v, v2) | v1;
    auto rhs = conflict_set(u, v | v1, v2 | v1);
    EXPECT_EQ(lhs, u.make_set({"b"}));
    EXPECT_EQ(rhs, u.make_set({"a", "b"}));
    EXPECT_NE(lhs, rhs);
}

TEST(ConflictSet, IntersectionDoesNotDistributeOverConflict) {
    auto u = ab();
    auto v = u.make_set({"a"}), v1 = u.make_set({"b"}), v2 = u.make_set({"a"});
    auto lhs = conflict_set(u, v, v1) & v2;
    auto rhs = conflict_set(u, v & v2, v1 & v2);
    EXPECT_EQ(lhs, u.make_set({"a"}));
    EXPECT_EQ(rhs, ValueSet{});
    EXPECT_NE(lhs, rhs);
}

TEST(ConflictSet, IsNotAssociative) {
    auto u = ab();
    auto v = u.make_set({"a"}), v1 = u.make_set({"b"}), v2 = u.make_set({"a"});
    auto lhs = conflict_set(u, conflict_set(u, v, v1), v2);
    auto rhs = conflict_set(u, v, conflict_set(u, v1, v2));
    EXPECT_EQ(lhs, ValueSet{});
    EXPECT_EQ(rhs, u.make_set({"a"}));
    EXPECT_NE(lhs, rhs);
}

TEST(ValueUniverse, FormatsSetsInNameOrder) {
    auto u = abcd();
    EXPECT_EQ(u.format(u.make_set({"c", "a"})), "{a, c}");
    EXPECT_EQ(u.format({}), "{}");
}

// Differential check against the string-set model on random universes.
TEST(ConflictSetProperty, MatchesReferenceModel) {
    std::mt19937_64 rng(0xC0FFEE);
    for (int trial = 0; trial < 2000; ++trial) {
        std::size_t n = 1 + rng() % 10;
        double density = (rng() % 100) / 100.0;
        auto ru = naive::random_universe(rng, n, density);
        ValueUniverse u(ru.names, ru.pairs);
        auto nv = naive::random_subset(rng, ru.names, 0.5);
        auto nw = naive::random_subset(rng, ru.names, 0.5);
        auto v = u.make_set_from(nv);
        auto w = u.make_set_from(nw);

        auto got = conflict_set(u, v, w);
        auto expected = naive::conflict(ru.pairs, nv, nw);
        ASSERT_EQ(u.names_of(got), std::vector<std::string>(expected.begin(), expected.end()))
            << "trial " << trial;
        ASSERT_TRUE(got.is_subset_of(v));
        ASSERT_EQ(is_consistent(u, v), naive::consistent(ru.pairs, nv));
        // Symmetry of the relation: one direction is empty iff the other is.
        ASSERT_EQ(got.empty(), conflict_set(u, w, v).empty());
    }
}
