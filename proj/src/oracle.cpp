#include "hueon/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

#include "hueon/errors.hpp"

namespace hueon {

std::vector<std::vector<NodeId>> simple_routes(const Topology& topology, NodeId src, NodeId dst) {
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> path{src};
  std::vector<bool> on_path(topology.node_count(), false);
  on_path[src] = true;
  const auto dfs = [&](auto&& self, NodeId at) -> void {
    if (at == dst) {
      out.push_back(path);
      return;
    }
    std::vector<NodeId> next;
    for (LinkId l : topology.incident(at)) next.push_back(topology.link(l).other(at));
    std::sort(next.begin(), next.end());
    for (NodeId n : next) {
      if (on_path[n]) continue;
      on_path[n] = true;
      path.push_back(n);
      self(self, n);
      path.pop_back();
      on_path[n] = false;
    }
  };
  dfs(dfs, src);
  return out;
}

namespace {

struct Option {
  std::vector<NodeId> route;
  std::vector<LinkId> links;
  std::vector<FiberKind> fibers;
  std::size_t format = 0;
  std::size_t fs = 0;
};

using Mask = std::uint64_t;  // slot bitmap, fits because max_slots <= 64

Mask window_bits(std::size_t start, std::size_t count) {
  const Mask run = count >= 64 ? ~Mask{0} : ((Mask{1} << count) - 1);
  return run << start;
}

std::vector<Option> candidate_options(const Topology& topology, const Demand& d, const ModulationTable& table,
                                      const OsnrProvider& osnr, FiberMask mask) {
  std::vector<Option> out;
  for (auto& route : simple_routes(topology, d.src, d.dst)) {
    const auto links = topology.route_links(route);
    const std::size_t hops = links.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << hops); ++bits) {
      std::vector<FiberKind> fibers(hops);
      bool allowed = true;
      for (std::size_t i = 0; i < hops; ++i) {
        // first link most significant, SSMF = 0
        fibers[i] = ((bits >> (hops - 1 - i)) & 1u) ? FiberKind::Ull : FiberKind::Ssmf;
        allowed = allowed && mask.allows(fibers[i]);
      }
      if (!allowed) continue;
      const auto value = osnr.try_path_osnr_linear(route, links, fibers);
      if (!value) continue;
      std::size_t best_fs = SIZE_MAX;
      std::vector<std::pair<std::size_t, std::size_t>> feasible;  // (format, fs)
      for (std::size_t m = 0; m < table.size(); ++m) {
        if (!meets_threshold(*value, table[m])) continue;
        const std::size_t fs = required_fs(d.bandwidth_gbps, table[m]);
        feasible.emplace_back(m, fs);
        best_fs = std::min(best_fs, fs);
      }
      for (const auto& [m, fs] : feasible) {
        if (fs == best_fs && fs <= topology.total_slots()) out.push_back({route, links, fibers, m, fs});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Option& a, const Option& b) { return a.fs < b.fs; });
  return out;
}

struct Search {
  const Topology& topology;
  const std::vector<std::vector<Option>>& options;
  std::size_t beta;
  std::vector<std::array<Mask, 2>> used;  // per link, per fiber
  std::vector<std::pair<std::size_t, std::size_t>> pick;  // (option, start) per demand
  std::vector<std::pair<std::size_t, std::size_t>> best_pick;
  std::size_t best = SIZE_MAX;
  std::size_t explored = 0;

  void run(std::size_t d, std::size_t current) {
    ++explored;
    if (d == options.size()) {
      if (current < best) {
        best = current;
        best_pick = pick;
      }
      return;
    }
    for (std::size_t o = 0; o < options[d].size(); ++o) {
      const Option& opt = options[d][o];
      for (std::size_t start = 0; start + opt.fs <= beta; ++start) {
        const std::size_t end = std::max(current, start + opt.fs);
        if (end >= best) break;  // later starts only end higher
        const Mask w = window_bits(start, opt.fs);
        bool clash = false;
        for (std::size_t i = 0; i < opt.links.size() && !clash; ++i) {
          clash = (used[opt.links[i]][index_of(opt.fibers[i])] & w) != 0;
        }
        if (clash) continue;
        for (std::size_t i = 0; i < opt.links.size(); ++i) used[opt.links[i]][index_of(opt.fibers[i])] |= w;
        pick[d] = {o, start};
        run(d + 1, end);
        for (std::size_t i = 0; i < opt.links.size(); ++i) used[opt.links[i]][index_of(opt.fibers[i])] &= ~w;
      }
    }
  }
};

}  // namespace

OracleResult brute_force_opt(const Topology& topology, std::span<const Demand> demands,
                             const ModulationTable& table, const OsnrProvider& osnr, FiberMask mask,
                             OracleLimits limits) {
  if (topology.node_count() > limits.max_nodes || demands.size() > limits.max_demands ||
      topology.total_slots() > limits.max_slots || limits.max_slots > 64) {
    throw InstanceTooLarge("exhaustive search limited to " + std::to_string(limits.max_nodes) + " nodes, " +
                           std::to_string(limits.max_demands) + " demands and " +
                           std::to_string(limits.max_slots) + " slots");
  }
  OracleResult result;
  if (demands.empty()) {
    result.feasible = true;
    return result;
  }
  std::vector<std::vector<Option>> options;
  for (const Demand& d : demands) {
    if (!(d.bandwidth_gbps > 0.0)) throw InvalidBandwidth("demand bandwidth must be positive");
    options.push_back(candidate_options(topology, d, table, osnr, mask));
  }

  Search search{topology, options, topology.total_slots(), {}, {}, {}, SIZE_MAX, 0};
  search.used.assign(topology.link_count(), {0, 0});
  search.pick.assign(demands.size(), {0, 0});
  search.run(0, 0);

  result.nodes_explored = search.explored;
  if (search.best == SIZE_MAX) return result;
  result.feasible = true;
  result.optimum = search.best;
  for (std::size_t d = 0; d < demands.size(); ++d) {
    const auto [o, start] = search.best_pick[d];
    const Option& opt = options[d][o];
    LightpathAssignment a;
    a.demand = demands[d].id;
    a.bandwidth_gbps = demands[d].bandwidth_gbps;
    a.route = opt.route;
    a.links = opt.links;
    a.fibers = opt.fibers;
    a.format = table[opt.format];
    a.start_slot = start;
    a.fs_count = opt.fs;
    result.witness.push_back(std::move(a));
  }
  return result;
}

}  // namespace hueon
