#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "hueon/modulation.hpp"
#include "hueon/network.hpp"
#include "hueon/osnr.hpp"
#include "hueon/provisioner.hpp"
#include "hueon/strategy.hpp"

namespace hueon {

struct StaticTraffic {
  double x_max_gbps = 15.0;
};

struct DynamicTraffic {
  double load_erlang = 30.0;  // per node pair
  double x_max_gbps = 700.0;  // n6s9 starts blocking around 30 Erlang per pair
  double mean_holding = 1.0;
  std::size_t horizon_events = 10000;  // arrivals simulated
  /// Arrivals discarded before metrics start. nullopt: 10% of the horizon.
  std::optional<std::size_t> warmup_events;

  std::size_t warmup() const { return warmup_events.value_or(horizon_events / 10); }
};

struct TrafficConfig {
  std::variant<StaticTraffic, DynamicTraffic> mode;
  std::uint64_t seed = 1;

  bool is_static() const { return std::holds_alternative<StaticTraffic>(mode); }
  void validate() const;  // throws InvalidParams
};

struct RunMetrics {
  std::size_t max_fs_used = 0;  // 1-based
  std::size_t offered = 0;
  std::size_t blocked = 0;
  double blocking_probability = 0.0;
  /// Occupied slot fraction per fiber kind (SSMF, ULL). Final state for
  /// static runs, time average after warmup for dynamic runs.
  std::array<double, 2> utilization{0.0, 0.0};
  std::vector<DemandId> blocked_ids;
};

struct StaticResult {
  RunMetrics metrics;
  std::vector<Demand> demands;
  std::vector<LightpathAssignment> assignments;
};

/// Everything a run reads but never writes.
struct SimulationContext {
  const Topology* topology = nullptr;
  const ModulationTable* table = nullptr;
  const OsnrProvider* osnr = nullptr;
  const LinkOsnrTable* link_osnr = nullptr;  // OA input; defaults to the provider's table
  FiberMask mask;
  Algorithm algorithm = Algorithm::Swp;

  ProvisionContext provision_context() const { return {table, osnr, link_osnr, mask}; }
};

/// One demand per ordered node pair, ascending (src, dst), bandwidth an
/// integer drawn uniformly from [10, floor(x_max)].
std::vector<Demand> generate_static_demands(const Topology& topology, double x_max_gbps, Rng& rng);

/// Provisions generated demands in ascending (src, dst) order.
/// Throws StrategyModeError for SU.
StaticResult run_static(const SimulationContext& context, const TrafficConfig& traffic,
                        const StrategyConfig& strategy);

/// Same, for a given demand list (kept in the given order).
StaticResult run_static(const SimulationContext& context, std::span<const Demand> demands,
                        const StrategyConfig& strategy);

struct SimEvent {
  enum class Kind { Arrival, Departure } kind;
  double time = 0.0;
  Demand demand;
  bool established = false;  // arrivals only
};

using SimObserver = std::function<void(const NetworkState&, const SimEvent&)>;

/// Discrete-event run: each unordered node pair offers Poisson arrivals at
/// rate load / mean_holding with exponential holding times. Throws
/// StrategyModeError for OA. The observer, when set, sees the state after
/// every event.
RunMetrics run_dynamic(const SimulationContext& context, const TrafficConfig& traffic,
                       const StrategyConfig& strategy, const SimObserver& observer = {});

struct AlphaSweepRow {
  double alpha = 0.0;
  double x_max_gbps = 0.0;
  std::uint64_t seed = 0;
  std::size_t max_fs_used = 0;
  std::size_t blocked = 0;
};

/// run_static with OA for every (x, alpha, seed), ordered by x, then alpha,
/// then seed. Grid points run on `threads` workers (0: hardware threads).
std::vector<AlphaSweepRow> sweep_alpha(const SimulationContext& context, std::span<const double> x_values,
                                       std::span<const double> alphas, std::span<const std::uint64_t> seeds,
                                       unsigned threads = 0);

/// Runs fn(i) for i in [0, n) on a small thread pool. Exceptions are
/// rethrown on the caller (first one wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, unsigned threads = 0);

}  // namespace hueon
