#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hueon/modulation.hpp"
#include "hueon/network.hpp"
#include "hueon/osnr.hpp"
#include "hueon/strategy.hpp"

namespace hueon {

struct OracleLimits {
  std::size_t max_nodes = 5;
  std::size_t max_demands = 3;
  std::size_t max_slots = 16;
};

struct OracleResult {
  bool feasible = false;
  std::size_t optimum = 0;  // 1-based max slot of the best joint solution
  std::vector<LightpathAssignment> witness;  // one per demand, in demand order
  std::size_t nodes_explored = 0;
};

/// Exact minimum of the network-wide max slot index by exhaustive search.
///
/// Per demand every simple route, fiber scheme (restricted by `mask`),
/// OSNR-feasible format and start slot is a candidate; the search picks one
/// candidate per demand with no slot shared on any fiber. Formats needing
/// more slots than the best feasible one on the same (route, scheme) are
/// dropped, ties are kept. Throws InstanceTooLarge beyond `limits`.
OracleResult brute_force_opt(const Topology& topology, std::span<const Demand> demands,
                             const ModulationTable& table, const OsnrProvider& osnr, FiberMask mask = {},
                             OracleLimits limits = {});

/// Every simple route from src to dst, in lexicographic node order.
std::vector<std::vector<NodeId>> simple_routes(const Topology& topology, NodeId src, NodeId dst);

}  // namespace hueon
