#include "hueon/provisioner.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "hueon/errors.hpp"
#include "hueon/swp.hpp"

namespace hueon {

std::string_view to_string(Algorithm algorithm) {
  return algorithm == Algorithm::Swp ? "swp" : "sp";
}

Algorithm parse_algorithm(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "swp") return Algorithm::Swp;
  if (lower == "sp") return Algorithm::ShortestPath;
  throw ConfigError("unknown algorithm '" + std::string(text) + "' (expected swp or sp)");
}

std::vector<std::size_t> format_schedule(double bandwidth_gbps, const ModulationTable& table) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::size_t f = required_fs(bandwidth_gbps, table[i]);
    while (i + 1 < table.size() && required_fs(bandwidth_gbps, table[i + 1]) == f) ++i;
    out.push_back(i);
  }
  return out;
}

Provisioner::Provisioner(ProvisionContext context, StrategyConfig strategy)
    : context_(context), strategy_(strategy), rng_(strategy.seed) {
  if (context_.table == nullptr || context_.osnr == nullptr) {
    throw InvalidParams("provisioning needs a modulation table and an OSNR provider");
  }
  if (context_.link_osnr == nullptr) context_.link_osnr = context_.osnr->link_table();
  strategy_.validate();
}

std::optional<LightpathAssignment> Provisioner::try_window(const NetworkState& state, const Demand& demand,
                                                           std::size_t format, const Route& route,
                                                           const std::vector<FiberSet>& fibers,
                                                           Window window) const {
  const ModulationTable& table = *context_.table;
  std::vector<FiberKind> scheme;
  scheme.reserve(route.links.size());

  if (strategy_.kind == StrategyKind::Su) {
    SuRequest request{route.nodes, route.links, demand.bandwidth_gbps, format, window};
    auto pick = su_enumerate_and_pick(state, request, table, *context_.osnr, strategy_.su, context_.mask);
    if (!pick) return std::nullopt;
    scheme = std::move(pick->scheme);
  } else {
    for (LinkId l : route.links) {
      const auto kind = fibers[l].single();
      if (!kind) return std::nullopt;
      scheme.push_back(*kind);
    }
    const auto osnr = context_.osnr->try_path_osnr_linear(route.nodes, route.links, scheme);
    if (!osnr || !meets_threshold(*osnr, table[format])) return std::nullopt;
  }

  LightpathAssignment a;
  a.demand = demand.id;
  a.bandwidth_gbps = demand.bandwidth_gbps;
  a.route = route.nodes;
  a.links = route.links;
  a.fibers = std::move(scheme);
  a.format = table[format];
  a.start_slot = window.start;
  a.fs_count = window.count;
  return a;
}

std::optional<LightpathAssignment> Provisioner::plan_swp(const NetworkState& state, const Demand& demand,
                                                         UffPhase phase) {
  const Topology& topology = state.topology();
  PlaneMapper mapper(strategy_, &rng_, context_.link_osnr, context_.mask, phase);
  SpectrumWindowPlane plane;
  plane.links.resize(topology.link_count());
  std::vector<FiberSet> fibers(topology.link_count());

  for (std::size_t format : format_schedule(demand.bandwidth_gbps, *context_.table)) {
    const std::size_t f = required_fs(demand.bandwidth_gbps, (*context_.table)[format]);
    for (std::size_t start = 0; start + f <= state.total_slots(); ++start) {
      plane.window = {start, f};
      for (LinkId l = 0; l < topology.link_count(); ++l) {
        plane.links[l].fibers = mapper.map(state, l, plane.window);
        plane.links[l].weight_km = topology.link(l).distance_km;
        fibers[l] = plane.links[l].fibers;
      }
      const auto touches = [&](NodeId n) {
        const auto& inc = topology.incident(n);
        return std::any_of(inc.begin(), inc.end(), [&](LinkId l) { return plane.links[l].present(); });
      };
      if (!touches(demand.src) || !touches(demand.dst)) continue;
      const auto route = shortest_route(topology, plane, demand.src, demand.dst);
      if (!route) continue;
      if (auto a = try_window(state, demand, format, *route, fibers, plane.window)) return a;
    }
  }
  return std::nullopt;
}

std::optional<LightpathAssignment> Provisioner::plan_sp(const NetworkState& state, const Demand& demand,
                                                        UffPhase phase) {
  const Topology& topology = state.topology();
  const auto route = shortest_route(topology, demand.src, demand.dst);
  if (!route) return std::nullopt;
  PlaneMapper mapper(strategy_, &rng_, context_.link_osnr, context_.mask, phase);
  std::vector<FiberSet> fibers(topology.link_count());

  for (std::size_t format : format_schedule(demand.bandwidth_gbps, *context_.table)) {
    const std::size_t f = required_fs(demand.bandwidth_gbps, (*context_.table)[format]);
    for (std::size_t start = 0; start + f <= state.total_slots(); ++start) {
      const Window window{start, f};
      bool complete = true;
      for (LinkId l : route->links) {
        fibers[l] = mapper.map(state, l, window);
        if (fibers[l].empty()) {
          complete = false;
          break;
        }
      }
      if (!complete) continue;
      if (auto a = try_window(state, demand, format, *route, fibers, window)) return a;
    }
  }
  return std::nullopt;
}

std::optional<LightpathAssignment> Provisioner::plan(const NetworkState& state, const Demand& demand,
                                                     Algorithm algorithm) {
  if (!(demand.bandwidth_gbps > 0.0)) throw InvalidBandwidth("demand bandwidth must be positive");
  const auto run = [&](UffPhase phase) {
    return algorithm == Algorithm::Swp ? plan_swp(state, demand, phase) : plan_sp(state, demand, phase);
  };
  if (strategy_.kind != StrategyKind::Uff) return run(UffPhase::UllPass);
  // ULL-only planes for every format first, then the whole search again on SSMF
  if (auto a = run(UffPhase::UllPass)) return a;
  return run(UffPhase::SsmfPass);
}

std::optional<LightpathAssignment> Provisioner::provision(NetworkState& state, const Demand& demand,
                                                          Algorithm algorithm) {
  auto a = plan(state, demand, algorithm);
  if (a) state.reserve(*a);
  return a;
}

std::optional<LightpathAssignment> provision_swp(NetworkState& state, const Demand& demand,
                                                 const StrategyConfig& strategy, const ProvisionContext& context) {
  Provisioner p(context, strategy);
  return p.provision(state, demand, Algorithm::Swp);
}

std::optional<LightpathAssignment> provision_sp(NetworkState& state, const Demand& demand,
                                                const StrategyConfig& strategy, const ProvisionContext& context) {
  Provisioner p(context, strategy);
  return p.provision(state, demand, Algorithm::ShortestPath);
}

}  // namespace hueon
