#include <gtest/gtest.h>

#include "hueon/cost.hpp"
#include "hueon/errors.hpp"
#include "test_support.hpp"

using namespace hueon;

TEST(Cost, ScenarioCounts) {
  EXPECT_EQ(deployment_counts(Scenario::S).ssmf + deployment_counts(Scenario::S).ull, 0u);
  EXPECT_EQ(deployment_counts(Scenario::SS).ssmf, 1u);
  EXPECT_EQ(deployment_counts(Scenario::US).ull, 1u);
  EXPECT_EQ(deployment_counts(Scenario::UU).ull, 2u);
  EXPECT_EQ(parse_scenario("UU"), Scenario::UU);
  EXPECT_EQ(to_string(Scenario::US), "US");
  EXPECT_THROW(parse_scenario("SU"), ConfigError);
}

TEST(Cost, UsnetTotals) {
  const auto t = io::load_topology(hueon::testing::data_path("usnet.json"));
  EXPECT_DOUBLE_EQ(deployment_cost(t, Scenario::S), 0.0);
  EXPECT_DOUBLE_EQ(deployment_cost(t, Scenario::SS), 8584.0);
  EXPECT_DOUBLE_EQ(deployment_cost(t, Scenario::US), 85840.0);
  EXPECT_DOUBLE_EQ(deployment_cost(t, Scenario::UU), 171680.0);
}

TEST(Cost, PerLinkCounts) {
  const auto t = hueon::testing::line_topology(3, 100);
  const std::vector<DeploymentCounts> counts{{1, 0}, {0, 2}};
  EXPECT_DOUBLE_EQ(deployment_cost(t, counts), 100.0 + 2000.0);
  EXPECT_DOUBLE_EQ(deployment_cost(t, counts, {2.0, 5.0}), 200.0 + 1000.0);
  const std::vector<DeploymentCounts> short_list{{1, 0}};
  EXPECT_THROW(deployment_cost(t, short_list), InvalidParams);
  EXPECT_THROW(CostModel({-1.0, 1.0}).validate(), InvalidParams);
}
