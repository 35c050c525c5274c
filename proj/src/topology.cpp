#include "hueon/topology.hpp"

#include <numeric>

#include "hueon/errors.hpp"

namespace hueon {

Topology::Topology(std::size_t total_slots) : total_slots_(total_slots) {
  if (total_slots == 0) throw TopologyError("total_slots must be positive");
}

NodeId Topology::add_node(std::string name) {
  if (by_name_.contains(name)) throw TopologyError("duplicate node '" + name + "'");
  const NodeId id = names_.size();
  by_name_.emplace(name, id);
  names_.push_back(std::move(name));
  incident_.emplace_back();
  return id;
}

LinkId Topology::add_link(NodeId a, NodeId b, double distance_km, AttenuationOverride attenuation) {
  if (a >= node_count() || b >= node_count()) throw TopologyError("link references unknown node");
  if (a == b) throw TopologyError("self-loop on node '" + names_[a] + "'");
  if (!(distance_km > 0.0)) {
    throw TopologyError("link " + names_[a] + "-" + names_[b] + " needs a positive distance");
  }
  if (find_link(a, b)) throw TopologyError("duplicate link " + names_[a] + "-" + names_[b]);

  Link link;
  link.a = a;
  link.b = b;
  link.distance_km = distance_km;
  if (attenuation.ssmf) link.fibers[index_of(FiberKind::Ssmf)].attenuation_db_per_km = *attenuation.ssmf;
  if (attenuation.ull) link.fibers[index_of(FiberKind::Ull)].attenuation_db_per_km = *attenuation.ull;
  for (const Fiber& f : link.fibers) {
    if (!(f.attenuation_db_per_km > 0.0)) throw TopologyError("attenuation must be positive");
  }

  const LinkId id = links_.size();
  links_.push_back(link);
  incident_[a].push_back(id);
  incident_[b].push_back(id);
  return id;
}

LinkId Topology::add_link(std::string_view a, std::string_view b, double distance_km,
                          AttenuationOverride attenuation) {
  return add_link(node(a), node(b), distance_km, attenuation);
}

std::optional<NodeId> Topology::find_node(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

NodeId Topology::node(std::string_view name) const {
  if (auto n = find_node(name)) return *n;
  throw TopologyError("unknown node '" + std::string(name) + "'");
}

std::optional<LinkId> Topology::find_link(NodeId a, NodeId b) const {
  if (a >= incident_.size()) return std::nullopt;
  for (LinkId l : incident_[a]) {
    if (links_[l].other(a) == b) return l;
  }
  return std::nullopt;
}

double Topology::total_length_km() const {
  return std::accumulate(links_.begin(), links_.end(), 0.0,
                         [](double acc, const Link& l) { return acc + l.distance_km; });
}

std::string Topology::link_label(LinkId l) const {
  const Link& link = links_.at(l);
  return names_[link.a] + "-" + names_[link.b];
}

std::vector<LinkId> Topology::route_links(std::span<const NodeId> route) const {
  if (route.size() < 2) throw EmptyRoute("route needs at least two nodes");
  std::vector<LinkId> out;
  out.reserve(route.size() - 1);
  for (std::size_t i = 0; i + 1 < route.size(); ++i) {
    auto l = find_link(route[i], route[i + 1]);
    if (!l) {
      throw TopologyError("nodes " + std::to_string(route[i]) + " and " + std::to_string(route[i + 1]) +
                          " are not adjacent");
    }
    out.push_back(*l);
  }
  return out;
}

}  // namespace hueon
