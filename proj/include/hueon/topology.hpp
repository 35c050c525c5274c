#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hueon/spectrum.hpp"

namespace hueon {

using NodeId = std::size_t;
using LinkId = std::size_t;

inline constexpr double kDefaultSsmfAttenuation = 0.20;  // dB/km
inline constexpr double kDefaultUllAttenuation = 0.166;  // dB/km
inline constexpr std::size_t kDefaultTotalSlots = 320;

struct Fiber {
  FiberKind kind = FiberKind::Ssmf;
  double attenuation_db_per_km = kDefaultSsmfAttenuation;
};

/// Undirected link carrying one SSMF and one ULL fiber.
struct Link {
  NodeId a = 0;
  NodeId b = 0;
  double distance_km = 0.0;
  std::array<Fiber, 2> fibers{Fiber{FiberKind::Ssmf, kDefaultSsmfAttenuation},
                              Fiber{FiberKind::Ull, kDefaultUllAttenuation}};

  const Fiber& fiber(FiberKind kind) const { return fibers[index_of(kind)]; }
  NodeId other(NodeId n) const { return n == a ? b : a; }
  bool touches(NodeId n) const { return n == a || n == b; }
};

struct AttenuationOverride {
  std::optional<double> ssmf;
  std::optional<double> ull;
};

class Topology {
 public:
  explicit Topology(std::size_t total_slots = kDefaultTotalSlots);

  NodeId add_node(std::string name);
  LinkId add_link(NodeId a, NodeId b, double distance_km, AttenuationOverride attenuation = {});
  LinkId add_link(std::string_view a, std::string_view b, double distance_km,
                  AttenuationOverride attenuation = {});

  std::size_t node_count() const { return names_.size(); }
  std::size_t link_count() const { return links_.size(); }
  std::size_t total_slots() const { return total_slots_; }

  const std::string& node_name(NodeId n) const { return names_.at(n); }
  std::optional<NodeId> find_node(std::string_view name) const;
  NodeId node(std::string_view name) const;  // throws TopologyError

  const Link& link(LinkId l) const { return links_.at(l); }
  std::span<const Link> links() const { return links_; }
  std::optional<LinkId> find_link(NodeId a, NodeId b) const;
  std::span<const LinkId> incident(NodeId n) const { return incident_.at(n); }

  double total_length_km() const;
  std::string link_label(LinkId l) const;  // "A-B"

  /// Links traversed by a node sequence. Throws TopologyError when two
  /// consecutive nodes are not adjacent, EmptyRoute when fewer than 2 nodes.
  std::vector<LinkId> route_links(std::span<const NodeId> route) const;

  std::string name;

 private:
  std::size_t total_slots_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> by_name_;
  std::vector<Link> links_;
  std::vector<std::vector<LinkId>> incident_;
};

}  // namespace hueon
