#include <gtest/gtest.h>

#include "ogsr/scenarios.hpp"

using namespace ogsr;

namespace {

TEST(Scenarios, CorpusListsSevenIdsInStableOrder) {
    const std::vector<std::string> ids = scenario_ids();
    ASSERT_EQ(ids.size(), 7u);
    EXPECT_EQ(ids.front(), "example-lex-interval");
    EXPECT_EQ(ids[1], "remark-q2-lex");
    EXPECT_EQ(ids.back(), "optimality-z");
}

TEST(Scenarios, EveryScenarioMeetsItsExpectedVerdict) {
    for (const std::string& id : scenario_ids()) {
        const ScenarioResult r = run_scenario(id);
        EXPECT_TRUE(r.met()) << r.report;
        EXPECT_EQ(r.id, id);
    }
}

TEST(Scenarios, ExpectedVerdictsMatchTheCorpusDesign) {
    EXPECT_EQ(run_scenario("remark-q2-lex").expected, Verdict::Finding);
    for (const std::string& id : scenario_ids())
        if (id != "remark-q2-lex") EXPECT_EQ(run_scenario(id).expected, Verdict::Pass) << id;
}

TEST(Scenarios, RerunsAreByteIdentical) {
    for (const std::string& id : scenario_ids())
        EXPECT_EQ(run_scenario(id).report, run_scenario(id).report) << id;
}

TEST(Scenarios, LexIntervalReportShape) {
    const ScenarioResult r = run_scenario("example-lex-interval");
    EXPECT_EQ(r.report.rfind("scenario: example-lex-interval\nexpected: Pass\n", 0), 0u);
    EXPECT_NE(r.report.find("check: interval-excludes-nonconstants = pass"), std::string::npos);
    EXPECT_NE(r.report.find("check: constants-invert = pass"), std::string::npos);
    EXPECT_NE(r.report.find("  witness-search: Found"), std::string::npos);
    EXPECT_NE(r.report.find("  witness: [2] (witness-search)"), std::string::npos);
    EXPECT_NE(r.report.find("observed: Pass\n"), std::string::npos);
}

TEST(Scenarios, Q2LexRecordsTheCompletenessFinding) {
    const ScenarioResult r = run_scenario("remark-q2-lex");
    EXPECT_EQ(r.observed, Verdict::Finding);
    EXPECT_NE(r.report.find("check: not-invertible-dual = pass"), std::string::npos);
    EXPECT_NE(r.report.find("check: not-invertible-cw = pass"), std::string::npos);
    EXPECT_NE(r.report.find("check: no-least-upper-bound = pass"), std::string::npos);
    EXPECT_NE(r.report.find("(1,-5)*(0,3) = (0,-15) < 0"), std::string::npos);
    EXPECT_NE(r.report.find("finding: the increasing chain (0,n)"), std::string::npos);
    EXPECT_NE(r.report.find("observed: Finding\n"), std::string::npos);
}

TEST(Scenarios, AntilexShowsRefusalArtifacts) {
    const ScenarioResult r = run_scenario("remark-antilex");
    EXPECT_NE(r.report.find("  witness-search: NotFound"), std::string::npos);
    EXPECT_NE(r.report.find("stopped-at: n = 1048576"), std::string::npos);
    EXPECT_NE(r.report.find("  hypothesis: witness-product = fail"), std::string::npos);
    EXPECT_NE(r.report.find("  status: HypothesisFailed"), std::string::npos);
}

TEST(Scenarios, ComponentwiseNamesTheFixedPoint) {
    const ScenarioResult r = run_scenario("remark-componentwise");
    EXPECT_NE(r.report.find("check: fixed-point-refutation = pass"), std::string::npos);
    EXPECT_NE(r.report.find("fixed-point: (1,0)"), std::string::npos);
    EXPECT_NE(r.report.find("verdict: FailFixedPoint"), std::string::npos);
}

TEST(Scenarios, SeminormedScenariosFreezeTheirInverses) {
    const ScenarioResult padic = run_scenario("theorem2-padic");
    EXPECT_NE(padic.report.find("  inverse: 156"), std::string::npos);
    EXPECT_NE(padic.report.find("  iterations: 4"), std::string::npos);

    const ScenarioResult series = run_scenario("theorem2-series");
    EXPECT_NE(series.report.find("  inverse: [1,1,1,1,1,1,1,1]"), std::string::npos);
    EXPECT_NE(series.report.find("  iterations: 8"), std::string::npos);
}

TEST(Scenarios, OptimalityScenarioRefusesTwo) {
    const ScenarioResult r = run_scenario("optimality-z");
    EXPECT_NE(r.report.find("check: two-refused = pass"), std::string::npos);
    EXPECT_NE(r.report.find("check: parity = pass"), std::string::npos);
    EXPECT_NE(r.report.find("  hypothesis: x-leq-one = fail"), std::string::npos);
}

TEST(Scenarios, UnknownIdThrowsWithTheCatalogue) {
    try {
        run_scenario("no-such-scenario");
        FAIL() << "expected UnknownScenario";
    } catch (const UnknownScenario& e) {
        EXPECT_NE(std::string(e.what()).find("example-lex-interval"), std::string::npos);
    }
}

} // namespace
