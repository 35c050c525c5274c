#pragma once

#include <span>
#include <string>
#include <vector>

#include "hueon/modulation.hpp"
#include "hueon/network.hpp"
#include "hueon/osnr.hpp"

namespace hueon {

enum class ViolationKind {
  Route,          // not a simple path between the demand's endpoints
  Range,          // window outside the fiber
  Overlap,        // one slot claimed by two lightpaths on the same fiber
  Continuity,     // state does not show the window on a chosen fiber
  Osnr,           // path OSNR below the format's threshold, or unknown
  SlotCount,      // fs_count differs from ceil(bandwidth / capacity)
  StrayOccupancy  // occupied slot not explained by any live lightpath
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

/// Checks a set of assignments against the provisioning constraints by
/// rebuilding per-fiber occupancy from scratch.
///
/// Shares no code with NetworkState or the provisioner; only the topology,
/// the modulation table and the OSNR provider are trusted. `demands`, when
/// given, is used to check route endpoints and bandwidths; `osnr` may be
/// null to skip the threshold check.
std::vector<Violation> check_assignments(const Topology& topology, std::span<const LightpathAssignment> assignments,
                                         const ModulationTable& table, const OsnrProvider* osnr,
                                         std::span<const Demand> demands = {});

/// check_assignments over the live lightpaths plus a slot-by-slot
/// comparison of the state's spectrum with the rebuilt occupancy.
std::vector<Violation> check_state(const NetworkState& state, const ModulationTable& table, const OsnrProvider* osnr);

}  // namespace hueon
