#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "hueon/modulation.hpp"
#include "hueon/spectrum.hpp"
#include "hueon/topology.hpp"

namespace hueon {

struct Demand {
  DemandId id = 0;
  NodeId src = 0;
  NodeId dst = 0;
  double bandwidth_gbps = 0.0;
};

/// A provisioned lightpath: route, one fiber per route link, format and the
/// slot window it occupies on every chosen fiber.
struct LightpathAssignment {
  DemandId demand = 0;
  double bandwidth_gbps = 0.0;
  std::vector<NodeId> route;
  std::vector<LinkId> links;         // route.size() - 1 entries
  std::vector<FiberKind> fibers;     // one per link
  ModulationFormat format;
  std::size_t start_slot = 0;
  std::size_t fs_count = 0;

  Window window() const { return {start_slot, fs_count}; }
  std::size_t end_slot() const { return start_slot + fs_count; }
};

/// Spectrum state of every fiber in a topology plus the live lightpaths.
///
/// Single writer: reserve/release are not synchronized.
class NetworkState {
 public:
  explicit NetworkState(const Topology& topology);

  const Topology& topology() const { return *topology_; }
  std::size_t total_slots() const { return topology_->total_slots(); }

  const SpectrumMap& spectrum(LinkId link, FiberKind kind) const { return fibers_.at(link)[index_of(kind)]; }

  bool window_free(LinkId link, FiberKind kind, Window window) const;

  /// Occupies the assignment's window on the chosen fiber of every route link.
  /// All-or-nothing: OverlapError / RangeError leave the state untouched.
  /// Also throws InvalidParams for a duplicate demand id or malformed route.
  void reserve(const LightpathAssignment& assignment);

  /// Frees every slot held by the demand. Throws UnknownDemand.
  void release(DemandId demand);

  bool holds(DemandId demand) const { return live_.contains(demand); }
  const LightpathAssignment& assignment(DemandId demand) const;
  const std::map<DemandId, LightpathAssignment>& live() const { return live_; }

  /// Largest 1-based occupied slot index over all fibers; 0 when empty.
  std::size_t max_fs_used() const;

  std::size_t occupied_slots(FiberKind kind) const;
  std::size_t occupied_slots() const;

 private:
  const Topology* topology_;
  std::vector<std::array<SpectrumMap, 2>> fibers_;
  std::map<DemandId, LightpathAssignment> live_;
};

}  // namespace hueon
