#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hueon/modulation.hpp"
#include "hueon/network.hpp"
#include "hueon/osnr.hpp"
#include "hueon/rng.hpp"
#include "hueon/strategy.hpp"
#include "hueon/swp.hpp"

namespace hueon {

enum class Algorithm {
  Swp,           // route searched per spectrum window plane
  ShortestPath,  // route fixed to the physical shortest path
};

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view text);  // "swp" | "sp"

/// Read-only inputs shared by every provisioning call.
struct ProvisionContext {
  const ModulationTable* table = nullptr;
  /// Source of end-to-end path OSNR for threshold checks.
  const OsnrProvider* osnr = nullptr;
  /// Per-link OSNR used by OA to compare fibers. Falls back to the provider's
  /// table when null.
  const LinkOsnrTable* link_osnr = nullptr;
  FiberMask mask;
};

/// Modulation format indices tried for a demand, highest efficiency first.
/// A format is skipped in favour of the next one when both need the same
/// number of slots; runs of equal counts collapse to the last format.
std::vector<std::size_t> format_schedule(double bandwidth_gbps, const ModulationTable& table);

/// Turns demands into lightpaths (or blocks them) with one fiber strategy.
///
/// Owns the strategy's random stream, so one Provisioner should serve one
/// simulation run.
class Provisioner {
 public:
  Provisioner(ProvisionContext context, StrategyConfig strategy);

  /// Finds an assignment without touching the state. nullopt means blocked.
  std::optional<LightpathAssignment> plan(const NetworkState& state, const Demand& demand,
                                          Algorithm algorithm = Algorithm::Swp);

  /// plan() followed by reserve() on success.
  std::optional<LightpathAssignment> provision(NetworkState& state, const Demand& demand,
                                               Algorithm algorithm = Algorithm::Swp);

  const StrategyConfig& strategy() const { return strategy_; }
  const ProvisionContext& context() const { return context_; }

 private:
  std::optional<LightpathAssignment> try_window(const NetworkState& state, const Demand& demand, std::size_t format,
                                                const Route& route, const std::vector<FiberSet>& fibers,
                                                Window window) const;
  std::optional<LightpathAssignment> plan_swp(const NetworkState& state, const Demand& demand, UffPhase phase);
  std::optional<LightpathAssignment> plan_sp(const NetworkState& state, const Demand& demand, UffPhase phase);

  ProvisionContext context_;
  StrategyConfig strategy_;
  Rng rng_;
};

/// One-shot helpers: provision a single demand with a fresh Provisioner.
std::optional<LightpathAssignment> provision_swp(NetworkState& state, const Demand& demand,
                                                 const StrategyConfig& strategy, const ProvisionContext& context);
std::optional<LightpathAssignment> provision_sp(NetworkState& state, const Demand& demand,
                                                const StrategyConfig& strategy, const ProvisionContext& context);

}  // namespace hueon
