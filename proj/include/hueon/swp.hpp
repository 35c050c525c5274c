#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hueon/network.hpp"
#include "hueon/strategy.hpp"
#include "hueon/topology.hpp"

namespace hueon {

struct VirtualLink {
  FiberSet fibers;  // empty: link absent from the plane
  double weight_km = 0.0;

  bool present() const { return !fibers.empty(); }
};

/// The topology filtered to links where a fixed slot window is free on at
/// least one fiber admitted by the fiber strategy.
struct SpectrumWindowPlane {
  Window window;
  std::vector<VirtualLink> links;  // indexed by LinkId
};

struct Route {
  std::vector<NodeId> nodes;
  std::vector<LinkId> links;
  double length_km = 0.0;
};

SpectrumWindowPlane make_plane(const NetworkState& state, Window window, PlaneMapper& mapper);

/// One plane per start slot 0..total_slots - fs_count, ascending.
std::vector<SpectrumWindowPlane> create_swp_list(const NetworkState& state, std::size_t fs_count,
                                                 PlaneMapper& mapper);

/// Minimum-distance route over the plane's present links. Among routes of
/// equal length the lexicographically smallest node-id sequence wins.
std::optional<Route> shortest_route(const Topology& topology, const SpectrumWindowPlane& plane, NodeId src,
                                    NodeId dst);

/// Same search over the unfiltered topology.
std::optional<Route> shortest_route(const Topology& topology, NodeId src, NodeId dst);

}  // namespace hueon
