#include "hueon/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <queue>
#include <thread>

#include "hueon/errors.hpp"

namespace hueon {

void TrafficConfig::validate() const {
  if (const auto* s = std::get_if<StaticTraffic>(&mode)) {
    if (!(s->x_max_gbps >= 10.0)) throw InvalidParams("x_max must be at least 10 Gb/s");
    return;
  }
  const auto& d = std::get<DynamicTraffic>(mode);
  if (!(d.x_max_gbps >= 10.0)) throw InvalidParams("x_max must be at least 10 Gb/s");
  if (!(d.load_erlang > 0.0)) throw InvalidParams("load must be positive");
  if (!(d.mean_holding > 0.0)) throw InvalidParams("mean holding time must be positive");
  if (d.warmup() >= d.horizon_events) throw InvalidParams("warmup must be shorter than the horizon");
}

namespace {

void check_context(const SimulationContext& c) {
  if (c.topology == nullptr || c.table == nullptr || c.osnr == nullptr) {
    throw InvalidParams("simulation needs a topology, a modulation table and an OSNR provider");
  }
}

double draw_bandwidth(Rng& rng, double x_max_gbps) {
  const auto hi = static_cast<std::uint64_t>(std::floor(x_max_gbps));
  return static_cast<double>(uniform_int(rng, 10, hi));
}

std::array<double, 2> utilization_now(const NetworkState& state) {
  const double capacity = static_cast<double>(state.topology().link_count() * state.total_slots());
  if (capacity == 0.0) return {0.0, 0.0};
  return {static_cast<double>(state.occupied_slots(FiberKind::Ssmf)) / capacity,
          static_cast<double>(state.occupied_slots(FiberKind::Ull)) / capacity};
}

}  // namespace

std::vector<Demand> generate_static_demands(const Topology& topology, double x_max_gbps, Rng& rng) {
  std::vector<Demand> out;
  for (NodeId s = 0; s < topology.node_count(); ++s) {
    for (NodeId d = 0; d < topology.node_count(); ++d) {
      if (s == d) continue;
      out.push_back({out.size(), s, d, draw_bandwidth(rng, x_max_gbps)});
    }
  }
  return out;
}

StaticResult run_static(const SimulationContext& context, std::span<const Demand> demands,
                        const StrategyConfig& strategy) {
  check_context(context);
  if (strategy.kind == StrategyKind::Su) {
    throw StrategyModeError("the SU strategy only applies to dynamic traffic");
  }
  NetworkState state(*context.topology);
  Provisioner provisioner(context.provision_context(), strategy);
  StaticResult result;
  result.demands.assign(demands.begin(), demands.end());
  for (const Demand& d : demands) {
    ++result.metrics.offered;
    if (auto a = provisioner.provision(state, d, context.algorithm)) {
      result.assignments.push_back(std::move(*a));
    } else {
      ++result.metrics.blocked;
      result.metrics.blocked_ids.push_back(d.id);
    }
  }
  result.metrics.max_fs_used = state.max_fs_used();
  result.metrics.utilization = utilization_now(state);
  if (result.metrics.offered > 0) {
    result.metrics.blocking_probability =
        static_cast<double>(result.metrics.blocked) / static_cast<double>(result.metrics.offered);
  }
  return result;
}

StaticResult run_static(const SimulationContext& context, const TrafficConfig& traffic,
                        const StrategyConfig& strategy) {
  traffic.validate();
  const auto* mode = std::get_if<StaticTraffic>(&traffic.mode);
  if (mode == nullptr) throw InvalidParams("run_static needs a static traffic config");
  check_context(context);
  Rng rng(traffic.seed);
  const auto demands = generate_static_demands(*context.topology, mode->x_max_gbps, rng);
  return run_static(context, demands, strategy);
}

RunMetrics run_dynamic(const SimulationContext& context, const TrafficConfig& traffic,
                       const StrategyConfig& strategy, const SimObserver& observer) {
  traffic.validate();
  check_context(context);
  const auto* mode = std::get_if<DynamicTraffic>(&traffic.mode);
  if (mode == nullptr) throw InvalidParams("run_dynamic needs a dynamic traffic config");
  if (strategy.kind == StrategyKind::Oa) {
    throw StrategyModeError("the OA strategy only applies to static traffic");
  }
  const Topology& topology = *context.topology;

  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId a = 0; a < topology.node_count(); ++a) {
    for (NodeId b = a + 1; b < topology.node_count(); ++b) pairs.emplace_back(a, b);
  }
  if (pairs.empty()) throw InvalidParams("dynamic traffic needs at least two nodes");

  // superposition of per-pair Poisson streams
  const double total_rate = static_cast<double>(pairs.size()) * mode->load_erlang / mode->mean_holding;
  const std::size_t warmup = mode->warmup();

  Rng rng(traffic.seed);
  NetworkState state(topology);
  Provisioner provisioner(context.provision_context(), strategy);

  using Departure = std::pair<double, DemandId>;
  std::priority_queue<Departure, std::vector<Departure>, std::greater<>> departures;

  RunMetrics metrics;
  std::array<double, 2> area{0.0, 0.0};
  double measured_from = 0.0;
  double last_time = 0.0;
  const auto advance = [&](double t, bool measuring) {
    if (measuring) {
      const auto u = utilization_now(state);
      for (std::size_t k = 0; k < 2; ++k) area[k] += u[k] * (t - last_time);
    }
    last_time = t;
  };

  double now = 0.0;
  for (std::size_t n = 0; n < mode->horizon_events; ++n) {
    now += exponential(rng, 1.0 / total_rate);
    const auto& [src, dst] = pairs[uniform_int(rng, 0, pairs.size() - 1)];
    const Demand demand{n, src, dst, draw_bandwidth(rng, mode->x_max_gbps)};
    const double holding = exponential(rng, mode->mean_holding);
    const bool measuring = n >= warmup;

    while (!departures.empty() && departures.top().first <= now) {
      const auto [t, id] = departures.top();
      departures.pop();
      advance(t, n > warmup);
      const auto& held = state.assignment(id);
      const Demand gone{id, held.route.front(), held.route.back(), held.bandwidth_gbps};
      state.release(id);
      if (observer) observer(state, {SimEvent::Kind::Departure, t, gone, false});
    }
    advance(now, n > warmup);
    if (n == warmup) measured_from = now;

    const auto a = provisioner.provision(state, demand, context.algorithm);
    if (a) departures.emplace(now + holding, demand.id);
    if (measuring) {
      ++metrics.offered;
      if (!a) {
        ++metrics.blocked;
        metrics.blocked_ids.push_back(demand.id);
      }
      metrics.max_fs_used = std::max(metrics.max_fs_used, state.max_fs_used());
    }
    if (observer) observer(state, {SimEvent::Kind::Arrival, now, demand, a.has_value()});
  }

  if (metrics.offered > 0) {
    metrics.blocking_probability = static_cast<double>(metrics.blocked) / static_cast<double>(metrics.offered);
  }
  if (last_time > measured_from) {
    for (std::size_t k = 0; k < 2; ++k) metrics.utilization[k] = area[k] / (last_time - measured_from);
  }
  return metrics;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<AlphaSweepRow> sweep_alpha(const SimulationContext& context, std::span<const double> x_values,
                                       std::span<const double> alphas, std::span<const std::uint64_t> seeds,
                                       unsigned threads) {
  std::vector<AlphaSweepRow> rows;
  for (double x : x_values) {
    for (double alpha : alphas) {
      for (std::uint64_t seed : seeds) rows.push_back({alpha, x, seed, 0, 0});
    }
  }
  parallel_for(
      rows.size(),
      [&](std::size_t i) {
        AlphaSweepRow& row = rows[i];
        StrategyConfig strategy;
        strategy.kind = StrategyKind::Oa;
        strategy.alpha = row.alpha;
        strategy.seed = row.seed;
        const auto result = run_static(context, TrafficConfig{StaticTraffic{row.x_max_gbps}, row.seed}, strategy);
        row.max_fs_used = result.metrics.max_fs_used;
        row.blocked = result.metrics.blocked;
      },
      threads);
  return rows;
}

}  // namespace hueon
