#include <gtest/gtest.h>

#include "factorlab/families.hpp"

using namespace factorlab;

TEST(Make, ParsesEveryFamily) {
    EXPECT_EQ(std::get<Numerical>(make("numerical: [4, 6, 9]")).generators(), (std::vector<std::int64_t>{4, 6, 9}));
    EXPECT_EQ(std::get<Numerical>(make("numerical: [2, 4, 5]")).generators(), (std::vector<std::int64_t>{2, 5}));
    EXPECT_EQ(std::get<SqrtCone>(make("sqrt-cone: m = 2")).m(), 2);
    EXPECT_TRUE(std::holds_alternative<HalfSpaceDiagonal>(make("half-space-diagonal")));
    EXPECT_TRUE(std::holds_alternative<PuiseuxTail>(make("  puiseux-tail  # comment\n")));
    EXPECT_EQ(std::get<FinGenVec>(make("fin-gen-vec: [(1,0), (1,2)]")).generators().size(), 2u);
}

TEST(Make, Errors) {
    EXPECT_THROW(make("sqrt-cone: m = 4"), ParseError);
    EXPECT_THROW(make("numerical: [4, 6]"), ParseError);
    EXPECT_THROW(make("numerical: [2, 3"), ParseError);
    EXPECT_THROW(make("cubic"), ParseError);
    EXPECT_THROW(make(""), ParseError);
    EXPECT_THROW(make("puiseux-tail extra"), ParseError);
    EXPECT_THROW(make("fin-gen-vec: [(1,0), (1)]"), ParseError);
}

TEST(Render, RoundTrip) {
    for (std::string t : {"numerical: [6, 9, 20]", "sqrt-cone: m = 3", "half-space-diagonal", "puiseux-tail",
                          "fin-gen-vec: [(0,1), (1,0)]"}) {
        auto s = make(t);
        EXPECT_EQ(render(s), t);
        EXPECT_EQ(make(render(s)), s);
    }
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto s = random_numerical(seed, 4, 30);
        EXPECT_EQ(make(render(s)), s);
    }
}

TEST(RandomNumerical, GoldenValues) {
    EXPECT_EQ(render(random_numerical(1, 4, 30)), "numerical: [12, 17, 25]");
    EXPECT_EQ(render(random_numerical(2, 4, 30)), "numerical: [25, 26]");
    EXPECT_EQ(render(random_numerical(42, 4, 30)), "numerical: [10, 19]");
}

TEST(RandomNumerical, PureAndValid) {
    for (std::uint64_t seed = 100; seed < 150; ++seed) {
        auto a = random_numerical(seed, 4, 30);
        EXPECT_EQ(a, random_numerical(seed, 4, 30));
        const auto& g = std::get<Numerical>(a).generators();
        EXPECT_LE(g.size(), 4u);
        EXPECT_LE(g.back(), 30);
    }
}

TEST(Metadata, Table) {
    auto m = metadata(make("numerical: [2, 3]"));
    EXPECT_EQ(m.conductor_descriptor, "{x : x >= 2}");
    EXPECT_EQ(m.closure_is_valuation, true);
    EXPECT_EQ(metadata(make("sqrt-cone: m = 2")).strongly_primary, false);
    EXPECT_FALSE(metadata(make("half-space-diagonal")).conductor_nonempty);
    EXPECT_EQ(metadata(make("puiseux-tail")).conductor_descriptor, "{q : q >= 1}");
}
