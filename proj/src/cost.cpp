#include "hueon/cost.hpp"

#include <string>

#include "hueon/errors.hpp"

namespace hueon {

std::string_view to_string(Scenario scenario) {
  switch (scenario) {
    case Scenario::S: return "S";
    case Scenario::SS: return "SS";
    case Scenario::US: return "US";
    case Scenario::UU: return "UU";
  }
  return "?";
}

Scenario parse_scenario(std::string_view text) {
  for (Scenario s : {Scenario::S, Scenario::SS, Scenario::US, Scenario::UU}) {
    if (text == to_string(s)) return s;
  }
  throw ConfigError("unknown scenario '" + std::string(text) + "' (expected S, SS, US or UU)");
}

DeploymentCounts deployment_counts(Scenario scenario) {
  switch (scenario) {
    case Scenario::S: return {0, 0};
    case Scenario::SS: return {1, 0};
    case Scenario::US: return {0, 1};
    case Scenario::UU: return {0, 2};
  }
  return {};
}

void CostModel::validate() const {
  if (!(ssmf_per_km >= 0.0) || !(ull_per_km >= 0.0)) throw InvalidParams("per-km costs must be non-negative");
}

double deployment_cost(const Topology& topology, std::span<const DeploymentCounts> per_link, const CostModel& model) {
  model.validate();
  if (per_link.size() != topology.link_count()) throw InvalidParams("need one deployment count per link");
  double total = 0.0;
  for (LinkId l = 0; l < topology.link_count(); ++l) {
    total += topology.link(l).distance_km *
             (per_link[l].ssmf * model.ssmf_per_km + per_link[l].ull * model.ull_per_km);
  }
  return total;
}

double deployment_cost(const Topology& topology, Scenario scenario, const CostModel& model) {
  const std::vector<DeploymentCounts> counts(topology.link_count(), deployment_counts(scenario));
  return deployment_cost(topology, counts, model);
}

}  // namespace hueon
