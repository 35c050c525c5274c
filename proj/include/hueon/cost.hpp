#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "hueon/topology.hpp"

namespace hueon {

/// Fiber deployment scenarios: which fibers are newly laid on every link.
enum class Scenario {
  S,   // existing SSMF only, nothing new
  SS,  // one new SSMF
  US,  // one new ULL next to the existing SSMF
  UU,  // two new ULL fibers
};

std::string_view to_string(Scenario scenario);
Scenario parse_scenario(std::string_view text);  // "S" | "SS" | "US" | "UU"

struct DeploymentCounts {
  unsigned ssmf = 0;
  unsigned ull = 0;
};

DeploymentCounts deployment_counts(Scenario scenario);

/// Deployment cost per km of fiber, in abstract units.
struct CostModel {
  double ssmf_per_km = 1.0;
  double ull_per_km = 10.0;

  void validate() const;  // throws InvalidParams
};

/// sum over links of distance * (n_ssmf * ssmf_per_km + n_ull * ull_per_km)
double deployment_cost(const Topology& topology, std::span<const DeploymentCounts> per_link,
                       const CostModel& model = {});

/// Same counts on every link.
double deployment_cost(const Topology& topology, Scenario scenario, const CostModel& model = {});

}  // namespace hueon
