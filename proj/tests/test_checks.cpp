#include <gtest/gtest.h>

#include "otype/checks.hpp"
#include "otype/error.hpp"

using namespace otype;

TEST(Checks, SuiteNames) {
    const auto& names = checks::suite_names();
    ASSERT_EQ(names.size(), 9u);
    EXPECT_EQ(names.front(), "counterexample");
    EXPECT_EQ(names.back(), "witness");
}

TEST(Checks, UnknownSuite) {
    EXPECT_THROW(checks::run_suite("nope"), DomainError);
}

// The suites are seeded; a different seed must pass as well.
class SuiteWithSeed : public ::testing::TestWithParam<std::string> {};

TEST_P(SuiteWithSeed, PassesWithAnotherSeed) {
    const auto r = checks::run_suite(GetParam(), {.seed = 20261018, .cases = 200});
    EXPECT_TRUE(r.passed) << r.counterexample;
    EXPECT_EQ(r.name, GetParam());
    EXPECT_GT(r.cases, 0u);
    EXPECT_EQ(r.failures, 0u);
    EXPECT_TRUE(r.counterexample.empty());
}

INSTANTIATE_TEST_SUITE_P(All, SuiteWithSeed, ::testing::ValuesIn(checks::suite_names()),
                         [](const auto& info) {
                             std::string name = info.param;
                             for (auto& c : name) {
                                 if (c == '-') {
                                     c = '_';
                                 }
                             }
                             return name;
                         });

TEST(Checks, CaseCountOverride) {
    EXPECT_EQ(checks::run_suite("k0-law", {.seed = 1, .cases = 17}).cases, 17u);
}

TEST(Checks, BruteForceCapIsAResourceLimit) {
    EXPECT_THROW(checks::run_suite("brute-force", {.cap = 3}), ResourceError);
}

TEST(Checks, RunAllCoversEverySuite) {
    const auto results = checks::run_all({.seed = 5, .cases = 20});
    ASSERT_EQ(results.size(), checks::suite_names().size());
    for (std::size_t i = 0; i < results.size(); ++i) {
        EXPECT_EQ(results[i].name, checks::suite_names()[i]);
        EXPECT_TRUE(results[i].passed) << results[i].name << ": " << results[i].counterexample;
    }
}
