#include <gtest/gtest.h>

#include <stdexcept>

#include "factorlab/parallel.hpp"
#include "factorlab/verify.hpp"

using namespace factorlab;

TEST(Parallel, KeepsIndexOrder) {
    auto r = run_ordered(100, 4, [](std::size_t i) { return i * i; });
    ASSERT_EQ(r.size(), 100u);
    for (std::size_t i = 0; i < r.size(); ++i) EXPECT_EQ(r[i], i * i);
}

TEST(Parallel, RethrowsLowestIndex) {
    auto f = [](std::size_t i) -> int {
        if (i == 7 || i == 3) throw std::runtime_error(std::to_string(i));
        return 0;
    };
    for (unsigned jobs : {1u, 4u}) {
        try {
            run_ordered(20, jobs, f);
            FAIL();
        } catch (const std::runtime_error& e) {
            EXPECT_STREQ(e.what(), "3");
        }
    }
}

TEST(Verify, SmallRunHasNoViolations) {
    SuiteOptions o;
    o.random_instances = 3;
    o.element_bound = 80;
    auto checks = run_suite("all", o);
    EXPECT_GT(checks.size(), 100u);
    for (const auto& c : checks)
        EXPECT_TRUE(c.holds) << c.suite << " " << c.instance << " " << c.relation << " at " << c.at << ": " << c.lhs
                             << " vs " << c.rhs;
}

TEST(Verify, EveryNamedSuiteProducesChecks) {
    SuiteOptions o;
    o.random_instances = 1;
    o.element_bound = 60;
    for (const auto& s : suite_names()) EXPECT_FALSE(run_suite(s, o).empty()) << s;
}

TEST(Verify, JobsDoNotChangeOutput) {
    SuiteOptions o;
    o.random_instances = 6;
    o.element_bound = 60;
    o.seed = 9;
    auto a = run_suite("length-sumset", o);
    o.jobs = 4;
    auto b = run_suite("length-sumset", o);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].instance, b[i].instance);
        EXPECT_EQ(a[i].at, b[i].at);
    }
}

TEST(Verify, UnknownSuiteIsAnInputError) {
    EXPECT_THROW(run_suite("nope", SuiteOptions{}), InputError);
}

TEST(Verify, PairSamplingFollowsSeed) {
    SuiteOptions o;
    o.random_instances = 0;
    o.element_bound = 80;
    o.pairs = 10;
    auto spec = make("numerical: [3, 5]");
    auto a = suite_on("length-sumset", spec, o);
    auto b = suite_on("length-sumset", spec, o);
    ASSERT_EQ(a.size(), 20u);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].at, b[i].at);
    o.pairs = 0;
    EXPECT_GT(suite_on("length-sumset", spec, o).size(), 20u);
}
